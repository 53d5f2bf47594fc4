"""Reference tables of known move counts and crossing counts.

These are the published figures every report is checked against: the
per-disk move counts and totals of the five schemes for the first eight
stack heights, and the per-post color-crossing counts of the three
free-tower schemes. The verification suite regenerates every cell from
the solvers and formulas and compares.

Table ids:

    T1   classical per-disk moves and totals
    T4   colored-tower ("100") per-disk moves and totals
    T6   "67" per-disk moves and totals
    TSF  SemiFree per-disk moves and totals
    T9   "62" per-disk moves and totals
    T10  color crossings per post for 67-down / 67-up / 62
"""

from __future__ import annotations

from .solvers import Algorithm

MAX_N = 8

# Rows indexed by n = 1..8; each row lists the per-disk counts for
# k = 1..n followed by the row total.

COUNT_TABLES: "dict[str, dict]" = {
    "T1": {
        "algorithm": Algorithm.CLASSICAL,
        "title": "classical per-disk moves and totals",
        "per_disk": [1, 2, 4, 8, 16, 32, 64, 128],
        "totals": [1, 3, 7, 15, 31, 63, 127, 255],
    },
    "T4": {
        "algorithm": Algorithm.C100,
        "title": "colored tower (100) per-disk moves and totals",
        "per_disk": [1, 3, 9, 27, 81, 243, 729, 2187],
        "totals": [1, 4, 13, 40, 121, 364, 1093, 3280],
    },
    "T6": {
        "algorithm": Algorithm.F67_DOWN,
        "title": "67 per-disk moves and totals",
        "per_disk": [1, 3, 7, 19, 55, 163, 487, 1459],
        "totals": [1, 4, 11, 30, 85, 248, 735, 2194],
    },
    "TSF": {
        "algorithm": Algorithm.SEMIFREE,
        "title": "SemiFree per-disk moves and totals",
        "per_disk": [1, 3, 7, 21, 61, 183, 547, 1641],
        "totals": [1, 4, 11, 32, 93, 276, 823, 2464],
    },
    "T9": {
        "algorithm": Algorithm.F62,
        "title": "62 per-disk moves and totals",
        "per_disk": [1, 3, 7, 19, 53, 153, 455, 1359],
        "totals": [1, 4, 11, 30, 83, 236, 691, 2050],
    },
}

# Crossing counts per post for n = 1..8, plus each scheme's move totals.

CROSSING_ROWS: "list[tuple[str, list[int]]]" = [
    ("67-down-s", [0, 0, 0, 0, 0, 0, 0, 0]),
    ("67-down-i", [0, 0, 1, 2, 3, 4, 5, 6]),
    ("67-down-d", [0, 0, 1, 2, 3, 4, 5, 6]),
    ("67-down-total", [0, 0, 2, 4, 6, 8, 10, 12]),
    ("67-down-moves", [1, 4, 11, 30, 85, 248, 735, 2194]),
    ("67-up-s", [0, 0, 0, 2, 2, 4, 4, 6]),
    ("67-up-i", [0, 0, 1, 1, 3, 3, 5, 5]),
    ("67-up-d", [0, 0, 0, 0, 0, 0, 0, 0]),
    ("67-up-total", [0, 0, 1, 3, 5, 7, 9, 11]),
    ("67-up-moves", [1, 4, 11, 30, 85, 248, 735, 2194]),
    ("62-s", [0, 0, 0, 1, 2, 2, 4, 4]),
    ("62-i", [0, 0, 1, 2, 3, 8, 9, 14]),
    ("62-d", [0, 0, 0, 2, 3, 4, 5, 6]),
    ("62-total", [0, 0, 1, 5, 8, 14, 18, 24]),
    ("62-moves", [1, 4, 11, 30, 83, 236, 691, 2050]),
]

TABLE_IDS = ("T1", "T4", "T6", "TSF", "T9", "T10")
