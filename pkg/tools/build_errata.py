"""Regenerate the bundled errata file from the profiles and datasheet.

    python tools/build_errata.py src/pqcost/data/errata.csv
"""

import sys

from pqcost.errata import errata_csv, find_errata

if __name__ == "__main__":
    target = sys.argv[1] if len(sys.argv) > 1 else "src/pqcost/data/errata.csv"
    with open(target, "w") as fh:
        fh.write(errata_csv(find_errata()))
