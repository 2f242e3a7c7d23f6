import sys

from gldpc_spectrum.cli import main

sys.exit(main())
