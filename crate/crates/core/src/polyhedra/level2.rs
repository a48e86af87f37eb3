//! Face list of the 96-vertex level-2 polyhedron: counter-clockwise vertex
//! cycles seen from outside, one per face.

pub(crate) const LEVEL2_FACES: [&[u16]; 50] = [
    &[0, 13, 20, 22, 6, 8],
    &[13, 14, 15, 19, 20],
    &[1, 2, 16, 19, 15],
    &[2, 5, 12, 10, 18, 16],
    &[16, 18, 17, 21, 22, 20, 19],
    &[6, 22, 21, 66, 63],
    &[10, 53, 56, 17, 18],
    &[17, 56, 57, 67, 66, 21],
    &[63, 66, 67, 65, 64],
    &[53, 54, 55, 57, 56],
    &[37, 65, 67, 57, 55, 59, 58],
    &[37, 38, 70, 69, 64, 65],
    &[36, 38, 37, 58, 60],
    &[58, 59, 93, 92, 60],
    &[54, 62, 90, 93, 59, 55],
    &[6, 63, 64, 69, 68, 7, 8],
    &[10, 12, 11, 61, 62, 54, 53],
    &[0, 8, 7, 34, 33],
    &[5, 46, 47, 11, 12],
    &[68, 69, 70, 88, 85],
    &[61, 72, 89, 90, 62],
    &[0, 33, 32, 23, 24, 14, 13],
    &[1, 15, 14, 24, 25, 3],
    &[1, 3, 4, 45, 46, 5, 2],
    &[7, 68, 85, 84, 35, 34],
    &[11, 47, 48, 71, 72, 61],
    &[36, 76, 74, 87, 88, 70, 38],
    &[36, 60, 92, 94, 75, 76],
    &[89, 91, 95, 94, 92, 93, 90],
    &[31, 32, 33, 34, 35],
    &[44, 48, 47, 46, 45],
    &[84, 85, 88, 87, 86],
    &[71, 73, 91, 89, 72],
    &[9, 31, 35, 84, 86, 83, 82],
    &[39, 40, 50, 73, 71, 48, 44],
    &[9, 30, 28, 23, 32, 31],
    &[23, 28, 27, 25, 24],
    &[3, 25, 27, 26, 4],
    &[4, 26, 41, 39, 44, 45],
    &[26, 27, 28, 30, 29, 43, 41],
    &[9, 82, 80, 29, 30],
    &[39, 41, 43, 42, 40],
    &[29, 80, 81, 49, 42, 43],
    &[79, 81, 80, 82, 83],
    &[40, 42, 49, 51, 50],
    &[49, 81, 79, 78, 77, 52, 51],
    &[74, 78, 79, 83, 86, 87],
    &[74, 76, 75, 77, 78],
    &[52, 77, 75, 94, 95],
    &[50, 51, 52, 95, 91, 73],
];
