#!/usr/bin/env python3
"""Run the acceptance checklist and exit with pytest's status."""

import pathlib
import sys

import pytest

ROOT = pathlib.Path(__file__).resolve().parent.parent


def main():
    args = [str(ROOT / "tests" / "test_acceptance.py"), "-v"]
    args.extend(sys.argv[1:])
    return pytest.main(args)


if __name__ == "__main__":
    sys.exit(main())
