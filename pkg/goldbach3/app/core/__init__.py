"""Core utilities: errors, logging, caching and workers."""
