#!/usr/bin/env python3

#  Copyright 2026 homogeneous-taylor contributors.

import os
import sys


def main() -> int:
    """
    Launcher for running the homtaylor command from a source checkout without installing it.

    Sample usage:
        python3 bin/homtaylor.py taylor --family euclidean --a 3,4 --b 1,0 --order 1
        python3 bin/homtaylor.py verify --suite all --trials 100 --seed 42
    """
    # make the project source importable so this script runs from anywhere
    sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "src"))

    from homogeneous.taylor.cli import main as homtaylor_main

    return homtaylor_main(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
