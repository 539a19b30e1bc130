#pragma once

// Frozen expected values for the acceptance grids: exhaustive census counts
// N1/N2/N3 over k = 3..18 for two (rho, range) settings, the rounded
// prediction header rows, the weighted column averages, and the single-cell
// deep-range series at (k, D) = (12, 3). Blank grid cells are stored as -1.

namespace expected {

constexpr int kGridADs[18] = {1, 2, 3, 5, 6, 7, 10, 11, 15, 19, 21, 23, 31, 35, 39, 43, 47, 123};
constexpr int kGridBDs[18] = {13, 14, 17, 22, 30, 33, 51, 55, 59, 67, 71, 79, 83, 87, 91, 95, 111, 219};

// rows k = 3..18, columns per kGridADs
constexpr int kGridAN1[16][18] = {
    {403, 184, -1, 101, 89, 174, 85, 196, 88, 222, 44, 75, 62, 105, 43, 198, 42, 94},
    {-1, 174, 583, 112, 107, 221, 97, 211, 87, 196, 58, 49, 68, 101, 49, 203, 32, 126},
    {429, 217, 570, 105, 96, 218, 101, 184, 92, 213, 48, 60, 63, 100, 53, 212, 37, 103},
    {388, 193, -1, 95, 105, 199, 109, 180, 88, 182, 52, 57, 62, 107, 60, 206, 44, 116},
    {420, 193, 627, 96, 92, 374, 94, 195, 104, 202, 42, 75, 74, 88, 44, 218, 34, 109},
    {802, 365, 592, 130, 85, 172, 88, 200, 103, 200, 57, 71, 54, 89, 51, 176, 44, 111},
    {371, 182, 1190, 93, 117, 188, 105, 215, 92, 194, 53, 74, 64, 100, 40, 183, 38, 99},
    {409, 189, 592, 107, 95, 206, 92, 197, 109, 199, 46, 65, 55, 83, 33, 231, 32, 94},
    {371, 179, 589, 95, 91, 178, 105, 395, 86, 186, 53, 60, 59, 98, 43, 182, 41, 94},
    {846, 182, 1230, 85, 87, 206, 101, 181, 85, 189, 50, 57, 69, 91, 49, 197, 28, 96},
    {380, 197, 622, 99, 79, 180, 102, 200, 89, 206, 47, 60, 61, 93, 40, 172, 35, 106},
    {413, 190, 582, 78, 83, 423, 99, 197, 89, 202, 55, 68, 57, 94, 49, 217, 29, 97},
    {405, 184, 1167, 93, 109, 187, 89, 185, 173, 208, 44, 54, 74, 100, 50, 178, 51, 106},
    {800, 386, 609, 101, 95, 175, 84, 201, 84, 201, 48, 55, 74, 81, 43, 201, 52, 96},
    {358, 202, 579, 98, 103, 193, 103, 202, 100, 227, 49, 72, 69, 88, 40, 208, 52, 114},
    {397, 201, 1203, 87, 91, 195, 100, 209, 90, 195, 54, 55, 79, 106, 51, 190, 43, 91},
};

// rows k = 3..18, columns per kGridADs
constexpr int kGridAN2[16][18] = {
    {403, 84, -1, 101, 52, 84, 34, 101, 48, 109, 44, 38, 28, 46, 25, 93, 18, 41},
    {-1, 83, 305, 112, 50, 96, 38, 111, 43, 99, 58, 22, 27, 51, 26, 105, 15, 59},
    {429, 118, 290, 105, 42, 107, 55, 95, 43, 97, 48, 31, 33, 48, 22, 86, 19, 57},
    {388, 104, -1, 95, 62, 103, 48, 89, 45, 97, 52, 28, 35, 50, 26, 94, 20, 64},
    {420, 95, 304, 96, 49, 203, 40, 94, 49, 96, 42, 34, 29, 47, 23, 97, 12, 56},
    {802, 186, 297, 130, 42, 87, 40, 84, 57, 101, 57, 33, 27, 52, 30, 83, 17, 57},
    {371, 86, 603, 93, 60, 90, 47, 109, 54, 109, 53, 38, 32, 41, 23, 100, 15, 59},
    {409, 105, 289, 107, 45, 103, 45, 103, 49, 96, 46, 34, 24, 48, 19, 120, 20, 50},
    {371, 99, 260, 95, 44, 89, 47, 184, 43, 102, 53, 31, 31, 53, 21, 92, 24, 41},
    {846, 91, 623, 85, 36, 81, 56, 90, 39, 109, 50, 30, 37, 48, 24, 96, 14, 53},
    {380, 100, 312, 99, 32, 96, 49, 110, 56, 102, 47, 30, 23, 46, 17, 80, 11, 54},
    {413, 92, 271, 78, 47, 215, 52, 104, 49, 110, 55, 38, 35, 42, 26, 118, 13, 41},
    {405, 93, 574, 93, 61, 103, 41, 93, 86, 112, 44, 30, 32, 49, 16, 93, 22, 48},
    {800, 195, 314, 101, 43, 89, 38, 111, 44, 102, 48, 25, 38, 46, 25, 109, 26, 46},
    {358, 96, 296, 98, 55, 93, 50, 94, 49, 113, 49, 33, 34, 40, 26, 112, 28, 55},
    {397, 105, 653, 87, 47, 101, 51, 96, 51, 102, 54, 28, 45, 53, 24, 97, 18, 34},
};

// rows k = 3..18, columns per kGridADs
constexpr int kGridAN3[16][18] = {
    {193, 42, -1, 46, 52, 43, 14, 53, 48, 59, 44, 20, 9, 25, 25, 45, 8, 41},
    {-1, 35, 305, 54, 50, 48, 17, 55, 43, 47, 58, 9, 16, 27, 26, 59, 8, 59},
    {233, 69, 290, 46, 42, 51, 24, 43, 43, 40, 48, 11, 17, 25, 22, 40, 8, 57},
    {193, 45, -1, 50, 62, 42, 20, 42, 45, 48, 52, 8, 16, 29, 26, 45, 10, 64},
    {215, 51, 304, 55, 49, 111, 19, 43, 49, 50, 42, 20, 13, 19, 23, 49, 6, 56},
    {402, 84, 297, 60, 42, 40, 21, 40, 57, 59, 57, 13, 12, 26, 30, 45, 6, 57},
    {186, 40, 603, 43, 60, 46, 25, 54, 54, 56, 53, 18, 17, 18, 23, 41, 6, 59},
    {198, 55, 289, 56, 45, 55, 18, 47, 49, 45, 46, 19, 6, 18, 19, 63, 10, 50},
    {187, 42, 260, 50, 44, 46, 25, 90, 43, 61, 53, 18, 12, 21, 21, 49, 11, 41},
    {414, 37, 623, 44, 36, 43, 28, 52, 39, 55, 50, 21, 21, 25, 24, 46, 6, 53},
    {203, 53, 312, 42, 32, 37, 24, 59, 56, 47, 47, 13, 10, 23, 17, 31, 3, 54},
    {209, 50, 271, 42, 47, 104, 27, 50, 49, 53, 55, 17, 17, 22, 26, 66, 6, 41},
    {185, 57, 574, 46, 61, 49, 15, 49, 86, 45, 44, 16, 18, 34, 16, 50, 10, 48},
    {401, 106, 314, 45, 43, 43, 13, 54, 44, 45, 48, 12, 13, 24, 25, 64, 14, 46},
    {179, 45, 296, 52, 55, 41, 23, 41, 49, 58, 49, 18, 20, 22, 26, 57, 14, 55},
    {199, 49, 653, 46, 47, 45, 23, 49, 51, 54, 54, 13, 24, 26, 24, 42, 3, 34},
};

// rows k = 3..18, columns per kGridBDs
constexpr int kGridBN1[16][18] = {
    {248, 115, 132, 240, 109, 131, 256, 135, 156, 513, 89, 91, 149, 81, 229, 56, 58, 117},
    {251, 118, 119, 250, 138, 116, 227, 128, 194, 498, 77, 106, 167, 86, 242, 75, 67, 144},
    {249, 117, 126, 272, 100, 109, 227, 119, 170, 488, 66, 92, 149, 78, 250, 57, 63, 144},
    {261, 118, 104, 273, 133, 106, 229, 118, 171, 514, 72, 85, 203, 77, 249, 62, 64, 107},
    {244, 131, 130, 229, 122, 132, 250, 120, 152, 498, 79, 104, 180, 81, 240, 64, 65, 133},
    {277, 111, 128, 238, 111, 116, 269, 124, 127, 480, 79, 93, 150, 72, 238, 65, 54, 112},
    {264, 139, 136, 248, 118, 109, 236, 125, 164, 522, 62, 104, 156, 75, 256, 56, 74, 109},
    {233, 126, 125, 246, 131, 103, 230, 102, 168, 486, 58, 103, 161, 78, 254, 66, 54, 121},
    {240, 117, 126, 223, 131, 135, 239, 124, 156, 441, 65, 101, 174, 96, 253, 59, 58, 99},
    {243, 125, 110, 245, 116, 128, 211, 125, 151, 503, 75, 87, 152, 79, 244, 63, 52, 126},
    {256, 124, 121, 237, 118, 116, 285, 114, 167, 493, 62, 96, 152, 88, 249, 57, 49, 137},
    {246, 127, 131, 225, 136, 128, 253, 114, 164, 475, 69, 87, 163, 74, 235, 66, 67, 119},
    {257, 117, 109, 265, 108, 108, 249, 119, 137, 453, 51, 111, 177, 88, 240, 68, 62, 130},
    {250, 121, 106, 250, 112, 106, 242, 108, 178, 454, 66, 91, 165, 81, 223, 60, 68, 122},
    {240, 110, 147, 240, 130, 119, 227, 107, 155, 454, 74, 107, 147, 93, 248, 70, 67, 138},
    {235, 125, 105, 227, 125, 128, 266, 141, 171, 496, 72, 104, 147, 85, 237, 81, 63, 136},
};

// rows k = 3..18, columns per kGridBDs
constexpr int kGridBN2[16][18] = {
    {248, 56, 132, 137, 60, 131, 130, 68, 79, 268, 38, 42, 82, 40, 112, 33, 30, 54},
    {251, 64, 119, 129, 67, 116, 110, 69, 103, 238, 42, 53, 86, 43, 127, 30, 33, 78},
    {249, 70, 126, 131, 55, 109, 115, 63, 82, 244, 31, 42, 75, 45, 113, 28, 27, 78},
    {261, 56, 104, 134, 64, 106, 102, 56, 86, 245, 26, 52, 102, 30, 122, 37, 30, 59},
    {244, 65, 130, 108, 60, 132, 130, 55, 76, 239, 45, 51, 91, 44, 119, 30, 24, 62},
    {277, 60, 128, 117, 61, 116, 117, 62, 62, 237, 36, 40, 77, 38, 120, 35, 32, 50},
    {264, 72, 136, 113, 62, 109, 126, 65, 73, 266, 31, 52, 91, 36, 124, 26, 38, 55},
    {233, 64, 125, 117, 67, 103, 121, 47, 85, 248, 26, 57, 79, 30, 123, 30, 22, 54},
    {240, 56, 126, 113, 60, 135, 116, 59, 77, 239, 33, 52, 95, 44, 119, 30, 30, 48},
    {243, 73, 110, 131, 58, 128, 108, 65, 83, 250, 36, 42, 87, 36, 125, 32, 30, 54},
    {256, 62, 121, 129, 53, 116, 133, 61, 87, 240, 31, 45, 80, 32, 113, 29, 24, 58},
    {246, 62, 131, 105, 62, 128, 129, 59, 79, 254, 31, 40, 96, 40, 129, 34, 37, 65},
    {257, 60, 109, 132, 59, 108, 124, 53, 52, 233, 19, 69, 86, 51, 122, 33, 32, 68},
    {250, 63, 106, 126, 56, 106, 127, 55, 93, 228, 29, 53, 82, 53, 120, 28, 28, 64},
    {240, 61, 147, 122, 64, 119, 125, 62, 80, 214, 33, 50, 80, 53, 128, 27, 31, 68},
    {235, 63, 105, 112, 51, 128, 141, 78, 89, 249, 28, 46, 73, 45, 128, 37, 32, 74},
};

// rows k = 3..18, columns per kGridBDs
constexpr int kGridBN3[16][18] = {
    {141, 32, 65, 69, 60, 131, 130, 35, 36, 127, 19, 23, 46, 40, 56, 16, 30, 54},
    {139, 32, 70, 63, 67, 116, 110, 37, 50, 114, 22, 23, 43, 43, 56, 13, 33, 78},
    {127, 31, 63, 64, 55, 109, 115, 38, 40, 119, 13, 23, 40, 45, 50, 20, 27, 78},
    {129, 32, 54, 70, 64, 106, 102, 29, 43, 110, 11, 23, 51, 30, 68, 16, 30, 59},
    {128, 33, 62, 51, 60, 132, 130, 24, 33, 125, 22, 26, 50, 44, 68, 13, 24, 62},
    {130, 28, 60, 67, 61, 116, 117, 31, 34, 115, 20, 16, 33, 38, 66, 18, 32, 50},
    {116, 32, 71, 58, 62, 109, 126, 28, 33, 135, 15, 27, 51, 36, 56, 11, 38, 55},
    {130, 41, 61, 58, 67, 103, 121, 31, 43, 129, 10, 27, 42, 30, 61, 14, 22, 54},
    {110, 21, 66, 56, 60, 135, 116, 28, 37, 120, 13, 25, 43, 44, 54, 14, 30, 48},
    {123, 38, 46, 59, 58, 128, 108, 35, 45, 110, 16, 18, 47, 36, 63, 13, 30, 54},
    {115, 30, 58, 72, 53, 116, 133, 36, 49, 113, 17, 20, 38, 32, 52, 14, 24, 58},
    {115, 30, 64, 60, 62, 128, 129, 28, 36, 139, 16, 18, 45, 40, 64, 21, 37, 65},
    {114, 41, 54, 64, 59, 108, 124, 30, 24, 124, 8, 32, 48, 51, 47, 15, 32, 68},
    {129, 37, 58, 61, 56, 106, 127, 28, 52, 111, 15, 31, 44, 53, 64, 9, 28, 64},
    {107, 38, 88, 59, 64, 119, 125, 26, 40, 111, 20, 25, 47, 53, 61, 11, 31, 68},
    {123, 25, 53, 50, 51, 128, 141, 36, 48, 126, 17, 17, 37, 45, 69, 18, 32, 74},
};

constexpr int kGridAI1[18] = {377, 189, 566, 94, 94, 189, 94, 189, 94, 189, 47, 63, 63, 94, 47, 189, 38, 94};
constexpr int kGridAI2[18] = {377, 94, 283, 94, 47, 94, 47, 94, 47, 94, 47, 31, 31, 47, 24, 94, 19, 47};
constexpr int kGridAI3[18] = {189, 47, 283, 47, 47, 47, 24, 47, 47, 47, 47, 16, 16, 24, 24, 47, 9, 47};
constexpr int kGridBI1[18] = {236, 118, 118, 236, 118, 118, 236, 118, 157, 472, 67, 94, 157, 79, 236, 59, 59, 118};
constexpr int kGridBI2[18] = {236, 59, 118, 118, 59, 118, 118, 59, 79, 236, 34, 47, 79, 39, 118, 29, 29, 59};
constexpr int kGridBI3[18] = {118, 29, 59, 59, 59, 118, 118, 29, 39, 118, 17, 24, 39, 39, 59, 15, 29, 59};

constexpr int kGridAAvg[18] = {398, 190, 596, 98, 95, 193, 97, 197, 97, 201, 50, 63, 65, 95, 46, 198, 40, 103};

// (12, 3) census over r in [1e4, 1e8]; rho = 1.10, 1.15, ..., 1.55
constexpr int kDeepRhoNum[10] = {110, 115, 120, 125, 130, 135, 140, 145, 150, 155};
constexpr int kDeepI[10] = {1, 2, 4, 8, 16, 32, 67, 142, 304, 658};
constexpr int kDeepN1[10] = {8, 12, 15, 22, 33, 47, 83, 177, 355, 706};
constexpr int kDeepN2[10] = {2, 5, 7, 11, 16, 23, 43, 88, 178, 388};
constexpr int kDeepN3[10] = {2, 5, 7, 11, 16, 23, 43, 88, 178, 388};

}  // namespace expected
