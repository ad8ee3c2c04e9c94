import sys

from girth_thickness.main import main

if __name__ == "__main__":
    sys.exit(main())
