"""Run the knotclock CLI from a checkout: python main.py <command>."""
from knotclock.cli import main

if __name__ == "__main__":
    main()
