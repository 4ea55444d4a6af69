"""Shared constants for knotclock.

This module contains constants used across multiple modules to ensure
consistency and avoid magic strings.
"""

import re

# Crossing code tokens: X(a,b,c,d) with an optional ;over=<label> suffix
CROSSING_PATTERN = r"X\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)(?:;over=(\d+))?"
CROSSING_REGEX = re.compile(CROSSING_PATTERN)
COMMENT_CHAR = "#"

# Rotation system
SLOTS_PER_VERTEX = 4

# Face ids are rendered as F0, F1, ...
FACE_PREFIX = "F"
FACE_ID_REGEX = re.compile(r"^F?(\d+)$")

# Lattice export formats
FORMAT_DOT = "dot"
FORMAT_JSON = "json"
EXPORT_FORMATS = [FORMAT_DOT, FORMAT_JSON]

# Verdict outcomes
VERDICT_PASS = "pass"
VERDICT_FAIL = "fail"
VERDICT_HYPOTHESIS_UNMET = "hypothesis-unmet"
VERDICTS = [VERDICT_PASS, VERDICT_FAIL, VERDICT_HYPOTHESIS_UNMET]

# Verification suites
SUITE_CLOCK_THEOREM = "clock-theorem"
SUITE_ORACLE = "oracle"
SUITE_ALEXANDER = "alexander"
SUITE_THM41 = "thm41"
SUITE_LEMMA42 = "lemma42"
SUITE_LEMMA43 = "lemma43"
SUITE_LEMMA51 = "lemma51"
SUITE_LEMMA52 = "lemma52"
SUITE_PROP53 = "prop53"
SUITE_MAIN = "main"
SUITE_EXAMPLE_NONPRIME = "example-nonprime"
SUITE_ALL = "all"

SUITES = [
    SUITE_CLOCK_THEOREM,
    SUITE_ORACLE,
    SUITE_ALEXANDER,
    SUITE_THM41,
    SUITE_LEMMA42,
    SUITE_LEMMA43,
    SUITE_LEMMA51,
    SUITE_LEMMA52,
    SUITE_PROP53,
    SUITE_MAIN,
    SUITE_EXAMPLE_NONPRIME,
]

# CLI exit codes
EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INPUT_ERROR = 2
# A runtime clock-theorem check failed: a bug, not bad input
EXIT_INTERNAL_ERROR = 3

# Randomized checks
DEFAULT_SEED = 1729
GREEDY_SAMPLES = 4

# Configuration
ENV_TABLE_PATH = "KNOTCLOCK_TABLE"
ENV_WORKERS = "KNOTCLOCK_WORKERS"
DEFAULT_TABLE_FILENAME = "knots_le8.pdtab"

# Table directives (generator-backed pd fields)
DIRECTIVE_RATIONAL = "@rational"
DIRECTIVE_BRAID = "@braid"
DIRECTIVE_MONTESINOS = "@montesinos"

# Error messages
ERROR_NOT_PROPER = "Universe is not proper (it has a splittable part)."
ERROR_NOT_SINGLE_KNOT = "traversal not a single knot"
ERROR_NON_PLANAR = "rotation system is not planar"
ERROR_STARS_NOT_ADJACENT = "Starred faces are not adjacent."
ERROR_NO_STATES = "No states exist for this star placement."
ERROR_MISSING_OVER = "Over/under data missing at crossing"
