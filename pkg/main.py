import sys

from goldbach3.app.main import main

if __name__ == "__main__":
    sys.exit(main())
