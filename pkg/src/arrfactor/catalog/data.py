"""Defining polynomials of the exceptional reflection arrangements, one linear
form per hyperplane, in factor order (so list position k is H_{k+1}).

``w`` is the canonical primitive root of unity of the listed conductor, ``i``
the canonical square root of -1.
"""

H3 = [  # 15 hyperplanes
    "x",
    "y",
    "z",
    "x + y",
    "y + z",
    "x-(w^3+w^2)y",
    "x-(w^3+w^2+1)y",
    "x - (w^3+w^2)y-(w^3+w^2)z",
    "x - (w^3+w^2+1)y-(w^3+w^2+1)z",
    "x + y + z",
    "x - (w^3+w^2)y-(w^3+w^2+1)z",
    "x - (w^3+w^2)y + z",
    "x + y + (w^3+w^2+2)z",
    "x + y - (w^3+w^2+1)z",
    "x - 2(w^3+w^2+1)y-(w^3+w^2+1)z",
]
G25 = [  # 12 hyperplanes
    "x",
    "y",
    "z",
    "x + y + z",
    "x + y + w z",
    "x + y - (w+1) z",
    "x + w y + z",
    "x + w y + w z",
    "x + w y - (w+1) z",
    "x - (w+1) y + z",
    "x - (w+1) y + w z",
    "x - (w+1) y - (w+1) z",
]
G24 = [  # 21 hyperplanes
    "x + (2 w^4 + 2 w^2 + 2 w + 1) y",
    "x + (-2 w^4 - 2 w^2 - 2 w - 1) y",
    "3x + (-w^4 - w^2 - w + 3) y -2(w^4 + w^2 + w) z",
    "x",
    "3x- (w^4 + w^2 + w + 4) y -2(w^4 + w^2 + w +1) z",
    "3x - 7 y + 4 z",
    "3x + 7 y - 4 z",
    "3x + (2 w^4 + 2 w^2 + 2 w + 1) y -2(w^4 +w^2 + w -1) z",
    "7y + (-3 w^4 - 3 w^2 - 3 w + 2) z",
    "3x + (-2 w^4 - 2 w^2 - 2 w - 1) y -4(w^4 + w^2 + w -1) z",
    "3x + (w^4 + w^2 + w + 4) y + 2(w^4 + w^2 + w + 1) z",
    "3x + (w^4 + w^2 + w - 3) y + 2(w^4 + w^2 + w) z",
    "7y + (3w^4 + 3 w^2 + 3 w + 5) z",
    "3x + (2 w^4 + 2 w^2 + 2 w + 1) y -2( w^4 + w^2 + w +2) z",
    "3x + (-2 w^4 - 2 w^2 - 2 w - 1) y + 2( w^4 + w^2 + w + 2) z",
    "7y + (-6 w^4 - 6 w^2 - 6 w - 10) z",
    "3x + (-2 w^4 - 2 w^2 - 2 w - 1) y + 2( w^4 + w^2 + w - 1) z",
    "3x + (-2 w^4 - 2 w^2 - 2w - 1) y -4(w^4 + w^2 + w +2) z",
    "3x + (2 w^4 + 2 w^2 + 2 w + 1) y + 4( w^4 + w^2 + w + 2) z",
    "3x + (2w^4 + 2 w^2 + 2 w + 1) y + 4( w^4 + w^2 + w - 1) z",
    "7y + (6 w^4 + 6 w^2 + 6 w - 4) z",
]
G26 = [  # 21 hyperplanes
    "x",
    "y",
    "z",
    "x - y",
    "x - w y",
    "x - w^2 y",
    "x - z",
    "x -w z",
    "x - w^2 z",
    "y - z",
    "y -w z",
    "y - w^2 z",
    "x + y + z",
    "x + w y + z",
    "x + w^2y + z",
    "x + y + w z",
    "x + y + w^2z",
    "x +w^2 y + w^2 z",
    "x + w y + w^2z",
    "x + w^2 y + w z",
    "x + w y + w z",
]
G27 = [  # 45 hyperplanes
    "15 x + (24 w^7 - 18 w^6 - 6 w^5 + 18 w^4 - 6 w^3 + 12 w^2 - 6 w - 15 ) y + (-4 w^7 + 8 w^6 - 4 w^5 + 2 w^4 - 4 w^3 - 12 w^2 + 6 w ) z",
    "3 y + (w^7 + 3 w^5 - w^4 - w^3 + w^2 - w + 2 ) z",
    "15 x + (-18 w^6 + 6 w^5 + 12 w^4 - 6 w^3 + 12 w^2 - 24 w - 3 ) y + (-12 w^6 + 4 w^5 + 8 w^4 - 4 w^3 + 8 w^2 - 16 w - 2 ) z",
    "15 x + (-12 w^7 - 18 w^6 + 12 w^5 - 6 w^4 - 6 w^3 + 12 w^2 - 18 w + 3 ) y + (2 w^7 + 8 w^6 - 2 w^5 + 6 w^4 + 6 w^3 - 2 w^2 - 2 w + 2 ) z",
    "15 x + (12 w^7 - 18 w^6 - 6 w^3 + 12 w^2 - 9 ) y + (-2 w^7 + 28 w^6 - 10 w^5 + 6 w^3 - 22 w^2 + 20 w + 4 ) z",
    "15 x + (9 w^7 - 12 w^6 - 3 w^5 + 9 w^4 - 9 w^3 + 3 w^2 - 3 w - 9 ) y + (w^7 - 8 w^6 + 3 w^5 - 4 w^4 - w^3 + 7 w^2 - 2 w - 1 ) z",
    "15 x + (12 w^7 - 18 w^6 - 6 w^3 + 12 w^2 - 9 ) y + (-22 w^7 + 8 w^6 + 10 w^5 + 6 w^3 - 2 w^2 - 20 w + 14 ) z",
    "15 x + (6 w^7 + 6 w^6 + 12 w^3 + 6 w^2 + 3 ) y + (14 w^7 - 16 w^6 + 10 w^4 - 2 w^3 + 14 w^2 - 10 w - 8 ) z",
    "15 x + (-3 w^7 - 6 w^6 + 6 w^5 - 3 w^4 + 3 w^3 + 9 w^2 - 9 w + 3 ) y + (3 w^7 + 6 w^6 - w^5 - 2 w^4 + 7 w^3 + w^2 + 4 w + 2 ) z",
    "15 x + (12 w^7 + 18 w^6 - 12 w^5 + 6 w^4 + 6 w^3 - 12 w^2 + 18 w - 3 ) y + (-2 w^7 - 8 w^6 + 2 w^5 - 6 w^4 - 6 w^3 + 2 w^2 + 2 w - 2 ) z",
    "15 x + (30 w^7 - 6 w^6 - 18 w^5 + 24 w^4 - 12 w^3 - 6 w^2 + 12 w - 21 ) y + (20 w^7 - 4 w^6 - 12 w^5 + 16 w^4 - 8 w^3 - 4 w^2 + 8 w - 14 ) z",
    "15 x + (6 w^7 + 6 w^6 + 12 w^3 + 6 w^2 + 3 ) y + (-26 w^7 + 4 w^6 + 10 w^5 - 20 w^4 - 2 w^3 - 6 w^2 + 12 ) z",
    "3 y + (-2 w^7 - 2 w^5 - w^4 + 2 w^3 - 2 w^2 - w + 1 ) z",
    "15 x + (3 w^7 + 6 w^6 - 6 w^5 + 3 w^4 - 3 w^3 - 9 w^2 + 9 w - 3 ) y + (-3 w^7 - 6 w^6 + w^5 + 2 w^4 - 7 w^3 - w^2 - 4 w - 2 ) z",
    "x + (2 w^6 + 2 w^3 + 1 ) y",
    "15 x + (-12 w^7 + 6 w^5 - 3 w^4 - 9 w + 6 ) y + (-3 w^7 - w^5 - 2 w^4 - 5 w^3 - 5 w^2 + 4 w - 1 ) z",
    "15 x + (-6 w^7 + 6 w^6 + 6 w^5 - 18 w^4 + 12 w^3 + 6 w^2 + 6 w + 9 ) y + (-14 w^7 + 4 w^6 + 4 w^5 - 2 w^4 - 2 w^3 - 6 w^2 - 6 w + 6 ) z",
    "15 x + (-12 w^7 + 18 w^6 + 6 w^3 - 12 w^2 + 9 ) y + (22 w^7 - 8 w^6 - 10 w^5 - 6 w^3 + 2 w^2 + 20 w - 14 ) z",
    "15 x + (-6 w^7 - 6 w^6 - 12 w^3 - 6 w^2 - 3 ) y + (-14 w^7 + 16 w^6 - 10 w^4 + 2 w^3 - 14 w^2 + 10 w + 8 ) z",
    "x + (2 w^7 - 2 w^6 + 2 w^2 - 1 ) y",
    "x + (-2 w^6 - 2 w^3 - 1 ) y",
    "3 y + (-w^7 + 2 w^5 + w^4 + w^3 - w^2 + w + 2 ) z",
    "15 x + (6 w^7 + 6 w^6 + 12 w^3 + 6 w^2 + 3 ) y + (14 w^7 - 16 w^6 - 10 w^5 + 20 w^4 - 22 w^3 - 6 w^2 - 18 ) z",
    "15 x + (-6 w^7 + 3 w^5 - 9 w^4 + 3 w + 3 ) y + (11 w^7 - 10 w^6 - 3 w^5 + 4 w^4 - 5 w^3 + 5 w^2 + 2 w - 8 ) z",
    "15 x + (18 w^6 - 6 w^5 - 12 w^4 + 6 w^3 - 12 w^2 + 24 w + 3 ) y + (12 w^6 - 4 w^5 - 8 w^4 + 4 w^3 - 8 w^2 + 16 w + 2 ) z",
    "15 x + (-6 w^7 - 6 w^6 - 12 w^3 - 6 w^2 - 3 ) y + (26 w^7 - 4 w^6 - 10 w^5 + 20 w^4 + 2 w^3 + 6 w^2 - 12 ) z",
    "15 x + (-12 w^7 + 18 w^6 + 6 w^3 - 12 w^2 + 9 ) y + (-18 w^7 + 12 w^6 + 10 w^5 - 10 w^4 + 14 w^3 + 2 w^2 - 10 w + 16 ) z",
    "15 x + (-9 w^7 + 12 w^6 + 3 w^5 - 9 w^4 + 9 w^3 - 3 w^2 + 3 w + 9 ) y + (-w^7 + 8 w^6 - 3 w^5 + 4 w^4 + w^3 - 7 w^2 + 2 w + 1 ) z",
    "x",
    "x + (-2 w^7 + 2 w^6 - 2 w^2 + 1 ) y",
    "15 x + (-24 w^7 + 18 w^6 + 6 w^5 - 18 w^4 + 6 w^3 - 12 w^2 + 6 w + 15 ) y + (4 w^7 - 8 w^6 + 4 w^5 - 2 w^4 + 4 w^3 + 12 w^2 - 6 w ) z",
    "15 x + (-18 w^7 + 6 w^6 + 12 w^5 - 6 w^4 + 12 w^3 + 6 w^2 - 18 w + 15 ) y + (8 w^7 - 16 w^6 - 2 w^5 + 6 w^4 - 12 w^3 + 4 w^2 - 2 w - 10 ) z",
    "15 x + (6 w^7 - 3 w^5 + 9 w^4 - 3 w - 3 ) y + (-11 w^7 + 10 w^6 + 3 w^5 - 4 w^4 + 5 w^3 - 5 w^2 - 2 w + 8 ) z",
    "15 x + (18 w^7 - 6 w^6 - 12 w^5 + 6 w^4 - 12 w^3 - 6 w^2 + 18 w - 15 ) y + (-8 w^7 + 16 w^6 + 2 w^5 - 6 w^4 + 12 w^3 - 4 w^2 + 2 w + 10 ) z",
    "15 x + (-6 w^7 - 6 w^6 - 12 w^3 - 6 w^2 - 3 ) y + (-4 w^7 - 4 w^6 + 10 w^4 - 8 w^3 - 4 w^2 - 10 w - 2 ) z",
    "15 x + (-12 w^7 + 18 w^6 + 6 w^3 - 12 w^2 + 9 ) y + (12 w^7 + 12 w^6 - 10 w^5 + 10 w^4 + 4 w^3 - 8 w^2 + 10 w - 4 ) z",
    "15 x + (-12 w^7 + 18 w^6 + 6 w^3 - 12 w^2 + 9 ) y + (2 w^7 - 28 w^6 + 10 w^5 - 6 w^3 + 22 w^2 - 20 w - 4 ) z",
    "15 x + (-30 w^7 + 6 w^6 + 18 w^5 - 24 w^4 + 12 w^3 + 6 w^2 - 12 w + 21 ) y + (-20 w^7 + 4 w^6 + 12 w^5 - 16 w^4 + 8 w^3 + 4 w^2 - 8 w + 14 ) z",
    "15 x + (6 w^7 + 6 w^6 + 12 w^3 + 6 w^2 + 3 ) y + (4 w^7 + 4 w^6 - 10 w^4 + 8 w^3 + 4 w^2 + 10 w + 2 ) z",
    "15 x + (12 w^7 - 18 w^6 - 6 w^3 + 12 w^2 - 9 ) y + (-12 w^7 - 12 w^6 + 10 w^5 - 10 w^4 - 4 w^3 + 8 w^2 - 10 w + 4 ) z",
    "15 x + (-6 w^7 - 6 w^6 - 12 w^3 - 6 w^2 - 3 ) y + (-14 w^7 + 16 w^6 + 10 w^5 - 20 w^4 + 22 w^3 + 6 w^2 + 18 ) z",
    "15 x + (12 w^7 - 6 w^5 + 3 w^4 + 9 w - 6 ) y + (3 w^7 + w^5 + 2 w^4 + 5 w^3 + 5 w^2 - 4 w + 1 ) z",
    "15 x + (6 w^7 - 6 w^6 - 6 w^5 + 18 w^4 - 12 w^3 - 6 w^2 - 6 w - 9 ) y + (14 w^7 - 4 w^6 - 4 w^5 + 2 w^4 + 2 w^3 + 6 w^2 + 6 w - 6 ) z",
    "15 x + (12 w^7 - 18 w^6 - 6 w^3 + 12 w^2 - 9 ) y + (18 w^7 - 12 w^6 - 10 w^5 + 10 w^4 - 14 w^3 - 2 w^2 + 10 w - 16 ) z",
    "3 y + (2 w^7 - 3 w^5 + w^4 - 2 w^3 + 2 w^2 + w - 2 ) z",
]
F4 = [  # 24 hyperplanes
    "u",
    "x",
    "y",
    "z",
    "u + x",
    "x + y",
    "y + z",
    "u + x + y",
    "x + 2 y",
    "x + y + z",
    "u + x + 2 y",
    "u + x + y + z",
    "x + 2 y + z",
    "u + 2 x + 2 y",
    "u + x + 2 y + z",
    "x + 2 y + 2 z",
    "u + 2 x + 2 y + z",
    "u + x + 2 y + 2 z",
    "u + 2 x + 3 y + z",
    "u + 2 x + 2 y + 2 z",
    "u + 2 x + 3 y + 2 z",
    "u + 2 x + 4 y + 2 z",
    "u + 3 x + 4 y + 2 z",
    "2u + 3 x + 4 y + 2z",
]
G29 = [  # 40 hyperplanes
    "z",
    "u - x + iy + i z",
    "u - x",
    "x - y",
    "u - x + i y - i z",
    "y + z",
    "u + i x - y + i z",
    "u - x - i y - i z",
    "u - y",
    "u - x - i y + i z",
    "u - i x + i y + z",
    "u + i x - y - i z",
    "x + z",
    "u - i x - y - i z",
    "u - i x - y + i z",
    "u + i x - i y + z",
    "y - z",
    "u - i x + i y - z",
    "x - z",
    "u + i x - i y - z",
    "y",
    "u + z",
    "u + i x + y + i z",
    "u + i x + i y + z",
    "u + i x + i y - z",
    "u - z",
    "u - i x - i y + z",
    "u - i x + y - i z",
    "u - i x + y + i z",
    "x",
    "u + x + i y + i z",
    "u + x - i y - i z",
    "u + x - i y + i z",
    "u + i x + y - i z",
    "u - i x - i y - z",
    "u + x + i y - i z",
    "x + y",
    "u",
    "u + y",
    "u + x",
]
G31 = [  # 60 hyperplanes
    "u",
    "u + i x",
    "u - x",
    "u + x + y + z",
    "x - y",
    "u -i x",
    "u + x",
    "u - x - y - z",
    "x",
    "u - x -i y -i z",
    "u + iy",
    "u + x -iy -iz",
    "u - y",
    "u - x + y + z",
    "u - x + iy + iz",
    "x + iy",
    "y + z",
    "u -ix - y -iz",
    "u + x + iy + iz",
    "u + ix -iy + z",
    "u -iy",
    "u + y",
    "y",
    "u -i x + y -iz",
    "u + x - y + z",
    "u + ix - y + iz",
    "x -i y",
    "x + z",
    "u + ix + y + iz",
    "u -ix + iy + z",
    "u + x - y - z",
    "u -ix + iy - z",
    "u - x + y - z",
    "u +ix -iy - z",
    "u + ix + iy - z",
    "x + y",
    "u - x + iy - iz",  # H37; the variant u - x + iy - z is not a reflecting hyperplane of G31
    "u + ix + y -iz",
    "u -iz",
    "u + ix - y -iz",
    "u + x + iy -iz",
    "u + ix + iy + z",
    "u + z",
    "u -ix -iy + z",
    "u - x - y + z",
    "u -ix - y + iz",
    "u -ix + y + iz",
    "u - x -iy + iz",
    "u -ix -iy - z",
    "x -iz",
    "x + iz",
    "y + iz",
    "u + iz",
    "u + x -iy + iz",
    "y -iz",
    "u - z",
    "u + x + y - z",
    "x - z",
    "z",
    "y - z",
]

# name -> (coordinates, conductor, forms)
EXCEPTIONAL = {
    "H3": ("xyz", 5, H3),
    "G24": ("xyz", 7, G24),
    "G25": ("xyz", 3, G25),
    "G26": ("xyz", 3, G26),
    "G27": ("xyz", 15, G27),
    "F4": ("uxyz", 1, F4),
    "G29": ("uxyz", 4, G29),
    "G31": ("uxyz", 4, G31),
}
