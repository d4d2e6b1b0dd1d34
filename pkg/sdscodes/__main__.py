#!/usr/bin/env python3

from .tools.sds_cli import main

if __name__ == "__main__":
    main()
