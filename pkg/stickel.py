#!/usr/bin/env python3
"""
Stickel - verification engine for Mazur-Tate Stickelberger elements.

Usage:
    python stickel.py theta --curve 11a1 --modulus 5
    python stickel.py verify --all --moduli 3..30
"""

import sys

from src.cli import main

if __name__ == "__main__":
    sys.exit(main())
