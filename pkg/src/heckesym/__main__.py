import sys

from heckesym.cli import main

sys.exit(main())
