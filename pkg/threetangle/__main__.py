import sys

from threetangle.cli import main

if __name__ == "__main__":
    sys.exit(main())
