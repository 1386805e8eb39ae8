"""Flats of the exceptional arrangements that are quoted by hyperplane number
(1-based, factor order of the defining polynomial), used as transcription
regressions. Each entry: (rank, support)."""

from __future__ import annotations

H3 = [(2, s) for s in ({1, 3}, {1, 15}, {3, 15}, {2, 8}, {2, 13}, {8, 13})]

G25 = [(2, s) for s in ({4, 9}, {4, 11}, {9, 11}, {5, 7}, {5, 12}, {7, 12})]

G24 = [(2, s) for s in (
    {1, 6, 11, 15}, {1, 7, 12, 17}, {1, 8, 10, 13}, {1, 9, 14, 18},
    {1, 2, 4}, {1, 3, 5}, {1, 16, 20}, {1, 19, 21},
    {6, 9, 10}, {6, 14, 17}, {7, 8, 15}, {7, 13, 18},
)]

G26 = [(2, s) for s in ({5, 3}, {5, 14}, {5, 19}, {5, 21}, {3, 14, 19, 21})]

G27 = [(2, s) for s in (
    {1, 2, 3, 4, 5}, {1, 6, 7, 8, 9}, {1, 10, 11, 12, 13}, {1, 14, 15, 16, 17},
    {4, 6, 18}, {3, 9, 19}, {2, 7, 20}, {5, 8, 21}, {3, 7, 22}, {5, 6, 23},
    {19, 23, 24}, {18, 22, 25}, {21, 22, 26}, {20, 23, 27}, {24, 25, 26, 27},
    {11, 17, 18}, {11, 16, 20}, {10, 16, 21}, {10, 17, 19}, {12, 15, 22},
    {13, 15, 23}, {4, 12, 25}, {8, 14, 25}, {3, 15, 24}, {9, 13, 24},
)]

F4 = [(2, s) for s in (
    {1, 2, 5}, {1, 6, 8, 14}, {1, 10, 12, 20}, {1, 13, 15, 22},
    {2, 8}, {2, 12}, {2, 13}, {6, 20}, {6, 22}, {10, 22},
)]

_G29_A = (6, 17, 21)
_G29_C = (13, 19, 30)
_G29_NOT_WITH_A = (2, 3, 5, 8, 10, 13, 19, 22, 26, 30, 31, 32, 33, 36, 38, 40)
_G29_NOT_WITH_C = (6, 7, 9, 12, 14, 15, 17, 21, 22, 23, 26, 28, 29, 34, 38, 39)

G29 = (
    [(2, s) for s in ({1, 6, 17, 21}, {1, 22, 26, 38}, {1, 13, 19, 30},
                      {6, 38}, {6, 30}, {13, 38})]
    + [(3, s) for s in (
        {1, 2, 3, 5, 6, 8, 10, 17, 21},
        {1, 6, 17, 21, 31, 32, 33, 36, 40},
        {1, 7, 9, 12, 13, 14, 15, 19, 30},
        {1, 13, 19, 23, 28, 29, 30, 34, 39},
    )]
    + [(2, s) for s in ({2, 12}, {2, 28}, {3, 31}, {7, 32}, {7, 39}, {23, 36})]
)

G31 = [(2, s) for s in (
    {1, 2, 3, 6, 7, 9}, {1, 11, 13, 21, 22, 23}, {1, 39, 43, 53, 56, 59},
    {2, 23}, {2, 59}, {11, 59}, {3, 4}, {4, 13}, {4, 56},
)]

# each k in the list meets some member h of the group in a 2-element flat {h, k}
G29_PAIRED = [(_G29_A, _G29_NOT_WITH_A), (_G29_C, _G29_NOT_WITH_C)]

LISTED = {"H3": H3, "G25": G25, "G24": G24, "G26": G26, "G27": G27,
          "F4": F4, "G29": G29, "G31": G31}


def grr3_rank2_supports(r: int) -> list[set[int]]:
    """Rank-2 supports of A(G(r,r,3)) as 0-based indices: A_i = i, B_j = r + j, C_k = 2r + k.
    Three pencils plus every triple {A_i, B_j, C_(j-i mod r)}."""
    out = [set(range(0, r)), set(range(r, 2 * r)), set(range(2 * r, 3 * r))]
    for i in range(r):
        for j in range(r):
            out.append({i, r + j, 2 * r + (j - i) % r})
    return out


def grr4_rank2_supports(r: int) -> list[set[int]]:
    """Rank-2 supports of A(G(r,r,4)) from the four families
    A_i = ker(x - z^i y), B_i = ker(z - z^i t), C_i = ker(x - z^i z), D_i = ker(y - z^i t),
    as 0-based indices in the constructor's order of coordinate pairs."""
    A = [0 * r + i for i in range(r)]
    C = [1 * r + i for i in range(r)]
    D = [4 * r + i for i in range(r)]
    B = [5 * r + i for i in range(r)]
    out = [set(A), set(B), set(C), set(D)]
    out += [{a, b} for a in A for b in B]
    out += [{c, d} for c in C for d in D]
    return out


def grr3_partition(r: int) -> list[list[int]]:
    """({A_0}, {A_1..A_(r-1), B_0, C_0}, {B_1..B_(r-1), C_1..C_(r-1)}), 0-based."""
    return [
        [0],
        list(range(1, r)) + [r, 2 * r],
        list(range(r + 1, 2 * r)) + list(range(2 * r + 1, 3 * r)),
    ]
