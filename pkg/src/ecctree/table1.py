"""Published minimum xi^c over n-vertex trees with maximum degree delta.

``TABLE1[n][delta] == (minimum value, number of non-isomorphic minimizers)``
for 11 <= n <= 20 and 2 <= delta <= n - 1, transcribed cell by cell from the
published table. Cells with delta >= n do not exist and are absent.
"""

# each row lists (value, count) for delta = 2, 3, ..., n - 1
_ROWS = {
    11: [(150, 1), (79, 3), (62, 5), (60, 6), (49, 1), (49, 1), (49, 1), (49, 1), (30, 1)],
    12: [(182, 1), (88, 3), (69, 4), (67, 8), (54, 1), (54, 1), (54, 1), (54, 1), (54, 1), (33, 1)],
    13: [(216, 1), (97, 1), (76, 4), (74, 9), (72, 10), (59, 1), (59, 1), (59, 1), (59, 1), (59, 1), (36, 1)],
    14: [(254, 1), (106, 1), (83, 3), (81, 11), (79, 12), (64, 1), (64, 1), (64, 1), (64, 1), (64, 1),
         (64, 1), (39, 1)],
    15: [(294, 1), (130, 7), (90, 2), (88, 11), (86, 16), (84, 14), (69, 1), (69, 1), (69, 1), (69, 1),
         (69, 1), (69, 1), (42, 1)],
    16: [(338, 1), (141, 10), (97, 1), (95, 12), (93, 19), (91, 19), (74, 1), (74, 1), (74, 1), (74, 1),
         (74, 1), (74, 1), (74, 1), (45, 1)],
    17: [(384, 1), (152, 7), (104, 1), (102, 11), (100, 23), (98, 24), (96, 21), (79, 1), (79, 1), (79, 1),
         (79, 1), (79, 1), (79, 1), (79, 1), (48, 1)],
    18: [(434, 1), (163, 7), (138, 24), (109, 11), (107, 25), (105, 31), (103, 27), (84, 1), (84, 1),
         (84, 1), (84, 1), (84, 1), (84, 1), (84, 1), (84, 1), (51, 1)],
    19: [(486, 1), (174, 4), (147, 20), (116, 9), (114, 29), (112, 37), (110, 36), (108, 29), (89, 1),
         (89, 1), (89, 1), (89, 1), (89, 1), (89, 1), (89, 1), (89, 1), (54, 1)],
    20: [(542, 1), (185, 3), (156, 18), (123, 8), (121, 30), (119, 46), (117, 45), (115, 39), (94, 1),
         (94, 1), (94, 1), (94, 1), (94, 1), (94, 1), (94, 1), (94, 1), (94, 1), (57, 1)],
}

TABLE1 = {n: {delta: cell for delta, cell in enumerate(row, start=2)} for n, row in _ROWS.items()}
TABLE1_ROWS = range(11, 21)


def table1_cells():
    """All ``(n, delta, value, count)`` cells in row-major order."""
    return [(n, d, v, c) for n in TABLE1_ROWS for d, (v, c) in TABLE1[n].items()]
