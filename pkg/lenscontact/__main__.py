import sys

from lenscontact.main import run

if __name__ == "__main__":
    sys.exit(run())
