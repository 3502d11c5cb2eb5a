"""Independent verbatim copy of the ten bundled count tables.

Kept separate from the package's own data module on purpose: the fidelity
test compares entry by entry against these values, so a transcription slip
on either side is caught.
"""

REF_D8_COMP = [
    [10372, 42, 51, 31, 8, 2, 3, 12],
    [36, 9641, 37, 41, 6, 7, 15, 2],
    [41, 19, 10821, 45, 6, 13, 10, 6],
    [34, 65, 41, 10311, 7, 5, 14, 9],
    [7, 8, 7, 6, 9715, 42, 53, 41],
    [4, 5, 13, 9, 21, 9621, 32, 69],
    [7, 4, 5, 11, 47, 23, 10571, 37],
    [11, 14, 8, 7, 31, 71, 41, 10003],
]
REF_D8_K2_FOUR = [
    [9569, 311, 70, 106, 7, 6, 2, 10],
    [290, 9768, 76, 41, 6, 7, 12, 5],
    [42, 134, 10315, 318, 3, 12, 5, 7],
    [162, 54, 271, 9518, 6, 4, 4, 10],
    [7, 3, 10, 4, 9218, 253, 32, 78],
    [13, 16, 14, 8, 270, 9401, 102, 72],
    [6, 2, 10, 10, 67, 103, 9625, 279],
    [8, 11, 7, 4, 178, 35, 254, 9577],
]
REF_D8_K4_FOUR = [
    [9541, 305, 307, 89, 10, 3, 5, 7],
    [337, 9321, 83, 271, 7, 10, 9, 7],
    [203, 72, 9314, 303, 4, 6, 18, 9],
    [104, 337, 251, 9931, 6, 6, 3, 19],
    [8, 12, 13, 10, 9213, 301, 250, 75],
    [4, 10, 10, 13, 299, 9437, 107, 261],
    [11, 5, 5, 7, 311, 103, 9321, 307],
    [8, 12, 10, 4, 108, 307, 201, 9632],
]
REF_D4_COMP = [
    [10562, 53, 45, 21],
    [47, 9731, 32, 43],
    [57, 18, 10714, 41],
    [37, 71, 35, 10136],
]
REF_D4_K2_FOUR = [
    [9404, 321, 68, 143],
    [291, 9935, 99, 39],
    [53, 201, 10235, 251],
    [105, 43, 304, 9523],
]
REF_D4_K4_FOUR = [
    [9550, 321, 307, 104],
    [294, 9227, 97, 291],
    [195, 121, 9382, 271],
    [132, 338, 327, 9878],
]
REF_D2_COMP = [
    [10562, 53],
    [47, 9731],
]
REF_D2_K2_FOUR = [
    [9867, 225],
    [216, 10103],
]
REF_NETWORK_FOUR = [
    [9569, 311, 0, 0, 0, 0, 0, 0],
    [290, 9768, 0, 0, 0, 0, 0, 0],
    [0, 0, 10315, 318, 0, 0, 0, 0],
    [0, 0, 271, 9518, 0, 0, 0, 0],
    [0, 0, 0, 0, 9213, 301, 250, 75],
    [0, 0, 0, 0, 299, 9437, 107, 261],
    [0, 0, 0, 0, 311, 103, 9321, 307],
    [0, 0, 0, 0, 108, 307, 201, 9632],
]
REF_NETWORK_COMP = [
    [10372, 42, 0, 0, 0, 0, 0, 0],
    [36, 9641, 0, 0, 0, 0, 0, 0],
    [0, 0, 10812, 45, 0, 0, 0, 0],
    [0, 0, 41, 10311, 0, 0, 0, 0],
    [0, 0, 0, 0, 9715, 42, 53, 41],
    [0, 0, 0, 0, 21, 9621, 32, 69],
    [0, 0, 0, 0, 47, 23, 10571, 37],
    [0, 0, 0, 0, 31, 71, 41, 10003],
]

# (d, k) -> (comp reference, fourier reference)
REF_BUILTINS = {
    (2, 2): (REF_D2_COMP, REF_D2_K2_FOUR),
    (4, 2): (REF_D4_COMP, REF_D4_K2_FOUR),
    (4, 4): (REF_D4_COMP, REF_D4_K4_FOUR),
    (8, 2): (REF_D8_COMP, REF_D8_K2_FOUR),
    (8, 4): (REF_D8_COMP, REF_D8_K4_FOUR),
}
