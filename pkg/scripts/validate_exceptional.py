"""Run the exceptional-table consistency checks and print the report."""

import sys

from nilorbits.excdata import validate_tables

rep = validate_tables()
print("\n".join(rep.lines()))
sys.exit(0 if rep.ok else 1)
