"""Package root for goldbach3."""
