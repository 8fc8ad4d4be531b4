"""
Parameter sweeps from the command line
======================================

The ``alphaspec`` command wraps the checks. Output is deterministic, so a
CSV produced today can be diffed against one produced later.
"""

from alphaspec.cli import run

##############################################################################
# One chain check as CSV on stdout.
run(["order", "--m", "13", "--k", "3", "--alpha", "0.5", "--csv", "-"])

##############################################################################
# A small grid. Each row is one (m, k, alpha, check) cell.
run(["sweep", "--m", "10,13", "--k", "3", "--alpha", "0,0.5", "--checks", "chain,bound", "--csv", "-"])

##############################################################################
# Write a supertree to a file and ask for its radius.
run(["family", "tsup", "1", "2", "9", "--k", "3", "--out", "/tmp/t129.txt"])
run(["radius", "--graph", "/tmp/t129.txt", "--alpha", "0.5"])
