// src/corpus/unicode-tables.cc

// Copyright 2026  The cstk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

// corpus/unicode-tables.cc
//
// Generated by tools/gen-unicode-tables.py (Unicode 13.0.0).
// Do not edit by hand.

#include "cstk/corpus/unicode-tables.h"

namespace cstk {
namespace unicode {

const CodepointRange kSpaceRanges[] = {
    {0x0009, 0x000D},
    {0x001C, 0x0020},
    {0x0085, 0x0085},
    {0x00A0, 0x00A0},
    {0x1680, 0x1680},
    {0x2000, 0x200A},
    {0x2028, 0x2029},
    {0x202F, 0x202F},
    {0x205F, 0x205F},
    {0x3000, 0x3000},
};
const std::size_t kSpaceRangesSize = sizeof(kSpaceRanges) / sizeof(kSpaceRanges[0]);

const CodepointRange kRemovableRanges[] = {
    {0x0000, 0x0008},
    {0x000E, 0x001B},
    {0x0021, 0x002F},
    {0x003A, 0x0040},
    {0x005B, 0x0060},
    {0x007B, 0x0084},
    {0x0086, 0x009F},
    {0x00A1, 0x00A9},
    {0x00AB, 0x00B1},
    {0x00B4, 0x00B4},
    {0x00B6, 0x00B8},
    {0x00BB, 0x00BB},
    {0x00BF, 0x00BF},
    {0x00D7, 0x00D7},
    {0x00F7, 0x00F7},
    {0x02C2, 0x02C5},
    {0x02D2, 0x02DF},
    {0x02E5, 0x02EB},
    {0x02ED, 0x02ED},
    {0x02EF, 0x02FF},
    {0x0375, 0x0375},
    {0x0378, 0x0379},
    {0x037E, 0x037E},
    {0x0380, 0x0385},
    {0x0387, 0x0387},
    {0x038B, 0x038B},
    {0x038D, 0x038D},
    {0x03A2, 0x03A2},
    {0x03F6, 0x03F6},
    {0x0482, 0x0482},
    {0x0530, 0x0530},
    {0x0557, 0x0558},
    {0x055A, 0x055F},
    {0x0589, 0x0590},
    {0x05BE, 0x05BE},
    {0x05C0, 0x05C0},
    {0x05C3, 0x05C3},
    {0x05C6, 0x05C6},
    {0x05C8, 0x05CF},
    {0x05EB, 0x05EE},
    {0x05F3, 0x060F},
    {0x061B, 0x061F},
    {0x066A, 0x066D},
    {0x06D4, 0x06D4},
    {0x06DD, 0x06DE},
    {0x06E9, 0x06E9},
    {0x06FD, 0x06FE},
    {0x0700, 0x070F},
    {0x074B, 0x074C},
    {0x07B2, 0x07BF},
    {0x07F6, 0x07F9},
    {0x07FB, 0x07FC},
    {0x07FE, 0x07FF},
    {0x082E, 0x083F},
    {0x085C, 0x085F},
    {0x086B, 0x089F},
    {0x08B5, 0x08B5},
    {0x08C8, 0x08D2},
    {0x08E2, 0x08E2},
    {0x0964, 0x0965},
    {0x0970, 0x0970},
    {0x0984, 0x0984},
    {0x098D, 0x098E},
    {0x0991, 0x0992},
    {0x09A9, 0x09A9},
    {0x09B1, 0x09B1},
    {0x09B3, 0x09B5},
    {0x09BA, 0x09BB},
    {0x09C5, 0x09C6},
    {0x09C9, 0x09CA},
    {0x09CF, 0x09D6},
    {0x09D8, 0x09DB},
    {0x09DE, 0x09DE},
    {0x09E4, 0x09E5},
    {0x09F2, 0x09F3},
    {0x09FA, 0x09FB},
    {0x09FD, 0x09FD},
    {0x09FF, 0x0A00},
    {0x0A04, 0x0A04},
    {0x0A0B, 0x0A0E},
    {0x0A11, 0x0A12},
    {0x0A29, 0x0A29},
    {0x0A31, 0x0A31},
    {0x0A34, 0x0A34},
    {0x0A37, 0x0A37},
    {0x0A3A, 0x0A3B},
    {0x0A3D, 0x0A3D},
    {0x0A43, 0x0A46},
    {0x0A49, 0x0A4A},
    {0x0A4E, 0x0A50},
    {0x0A52, 0x0A58},
    {0x0A5D, 0x0A5D},
    {0x0A5F, 0x0A65},
    {0x0A76, 0x0A80},
    {0x0A84, 0x0A84},
    {0x0A8E, 0x0A8E},
    {0x0A92, 0x0A92},
    {0x0AA9, 0x0AA9},
    {0x0AB1, 0x0AB1},
    {0x0AB4, 0x0AB4},
    {0x0ABA, 0x0ABB},
    {0x0AC6, 0x0AC6},
    {0x0ACA, 0x0ACA},
    {0x0ACE, 0x0ACF},
    {0x0AD1, 0x0ADF},
    {0x0AE4, 0x0AE5},
    {0x0AF0, 0x0AF8},
    {0x0B00, 0x0B00},
    {0x0B04, 0x0B04},
    {0x0B0D, 0x0B0E},
    {0x0B11, 0x0B12},
    {0x0B29, 0x0B29},
    {0x0B31, 0x0B31},
    {0x0B34, 0x0B34},
    {0x0B3A, 0x0B3B},
    {0x0B45, 0x0B46},
    {0x0B49, 0x0B4A},
    {0x0B4E, 0x0B54},
    {0x0B58, 0x0B5B},
    {0x0B5E, 0x0B5E},
    {0x0B64, 0x0B65},
    {0x0B70, 0x0B70},
    {0x0B78, 0x0B81},
    {0x0B84, 0x0B84},
    {0x0B8B, 0x0B8D},
    {0x0B91, 0x0B91},
    {0x0B96, 0x0B98},
    {0x0B9B, 0x0B9B},
    {0x0B9D, 0x0B9D},
    {0x0BA0, 0x0BA2},
    {0x0BA5, 0x0BA7},
    {0x0BAB, 0x0BAD},
    {0x0BBA, 0x0BBD},
    {0x0BC3, 0x0BC5},
    {0x0BC9, 0x0BC9},
    {0x0BCE, 0x0BCF},
    {0x0BD1, 0x0BD6},
    {0x0BD8, 0x0BE5},
    {0x0BF3, 0x0BFF},
    {0x0C0D, 0x0C0D},
    {0x0C11, 0x0C11},
    {0x0C29, 0x0C29},
    {0x0C3A, 0x0C3C},
    {0x0C45, 0x0C45},
    {0x0C49, 0x0C49},
    {0x0C4E, 0x0C54},
    {0x0C57, 0x0C57},
    {0x0C5B, 0x0C5F},
    {0x0C64, 0x0C65},
    {0x0C70, 0x0C77},
    {0x0C7F, 0x0C7F},
    {0x0C84, 0x0C84},
    {0x0C8D, 0x0C8D},
    {0x0C91, 0x0C91},
    {0x0CA9, 0x0CA9},
    {0x0CB4, 0x0CB4},
    {0x0CBA, 0x0CBB},
    {0x0CC5, 0x0CC5},
    {0x0CC9, 0x0CC9},
    {0x0CCE, 0x0CD4},
    {0x0CD7, 0x0CDD},
    {0x0CDF, 0x0CDF},
    {0x0CE4, 0x0CE5},
    {0x0CF0, 0x0CF0},
    {0x0CF3, 0x0CFF},
    {0x0D0D, 0x0D0D},
    {0x0D11, 0x0D11},
    {0x0D45, 0x0D45},
    {0x0D49, 0x0D49},
    {0x0D4F, 0x0D53},
    {0x0D64, 0x0D65},
    {0x0D79, 0x0D79},
    {0x0D80, 0x0D80},
    {0x0D84, 0x0D84},
    {0x0D97, 0x0D99},
    {0x0DB2, 0x0DB2},
    {0x0DBC, 0x0DBC},
    {0x0DBE, 0x0DBF},
    {0x0DC7, 0x0DC9},
    {0x0DCB, 0x0DCE},
    {0x0DD5, 0x0DD5},
    {0x0DD7, 0x0DD7},
    {0x0DE0, 0x0DE5},
    {0x0DF0, 0x0DF1},
    {0x0DF4, 0x0E00},
    {0x0E3B, 0x0E3F},
    {0x0E4F, 0x0E4F},
    {0x0E5A, 0x0E80},
    {0x0E83, 0x0E83},
    {0x0E85, 0x0E85},
    {0x0E8B, 0x0E8B},
    {0x0EA4, 0x0EA4},
    {0x0EA6, 0x0EA6},
    {0x0EBE, 0x0EBF},
    {0x0EC5, 0x0EC5},
    {0x0EC7, 0x0EC7},
    {0x0ECE, 0x0ECF},
    {0x0EDA, 0x0EDB},
    {0x0EE0, 0x0EFF},
    {0x0F01, 0x0F17},
    {0x0F1A, 0x0F1F},
    {0x0F34, 0x0F34},
    {0x0F36, 0x0F36},
    {0x0F38, 0x0F38},
    {0x0F3A, 0x0F3D},
    {0x0F48, 0x0F48},
    {0x0F6D, 0x0F70},
    {0x0F85, 0x0F85},
    {0x0F98, 0x0F98},
    {0x0FBD, 0x0FC5},
    {0x0FC7, 0x0FFF},
    {0x104A, 0x104F},
    {0x109E, 0x109F},
    {0x10C6, 0x10C6},
    {0x10C8, 0x10CC},
    {0x10CE, 0x10CF},
    {0x10FB, 0x10FB},
    {0x1249, 0x1249},
    {0x124E, 0x124F},
    {0x1257, 0x1257},
    {0x1259, 0x1259},
    {0x125E, 0x125F},
    {0x1289, 0x1289},
    {0x128E, 0x128F},
    {0x12B1, 0x12B1},
    {0x12B6, 0x12B7},
    {0x12BF, 0x12BF},
    {0x12C1, 0x12C1},
    {0x12C6, 0x12C7},
    {0x12D7, 0x12D7},
    {0x1311, 0x1311},
    {0x1316, 0x1317},
    {0x135B, 0x135C},
    {0x1360, 0x1368},
    {0x137D, 0x137F},
    {0x1390, 0x139F},
    {0x13F6, 0x13F7},
    {0x13FE, 0x1400},
    {0x166D, 0x166E},
    {0x169B, 0x169F},
    {0x16EB, 0x16ED},
    {0x16F9, 0x16FF},
    {0x170D, 0x170D},
    {0x1715, 0x171F},
    {0x1735, 0x173F},
    {0x1754, 0x175F},
    {0x176D, 0x176D},
    {0x1771, 0x1771},
    {0x1774, 0x177F},
    {0x17D4, 0x17D6},
    {0x17D8, 0x17DB},
    {0x17DE, 0x17DF},
    {0x17EA, 0x17EF},
    {0x17FA, 0x180A},
    {0x180E, 0x180F},
    {0x181A, 0x181F},
    {0x1879, 0x187F},
    {0x18AB, 0x18AF},
    {0x18F6, 0x18FF},
    {0x191F, 0x191F},
    {0x192C, 0x192F},
    {0x193C, 0x1945},
    {0x196E, 0x196F},
    {0x1975, 0x197F},
    {0x19AC, 0x19AF},
    {0x19CA, 0x19CF},
    {0x19DB, 0x19FF},
    {0x1A1C, 0x1A1F},
    {0x1A5F, 0x1A5F},
    {0x1A7D, 0x1A7E},
    {0x1A8A, 0x1A8F},
    {0x1A9A, 0x1AA6},
    {0x1AA8, 0x1AAF},
    {0x1AC1, 0x1AFF},
    {0x1B4C, 0x1B4F},
    {0x1B5A, 0x1B6A},
    {0x1B74, 0x1B7F},
    {0x1BF4, 0x1BFF},
    {0x1C38, 0x1C3F},
    {0x1C4A, 0x1C4C},
    {0x1C7E, 0x1C7F},
    {0x1C89, 0x1C8F},
    {0x1CBB, 0x1CBC},
    {0x1CC0, 0x1CCF},
    {0x1CD3, 0x1CD3},
    {0x1CFB, 0x1CFF},
    {0x1DFA, 0x1DFA},
    {0x1F16, 0x1F17},
    {0x1F1E, 0x1F1F},
    {0x1F46, 0x1F47},
    {0x1F4E, 0x1F4F},
    {0x1F58, 0x1F58},
    {0x1F5A, 0x1F5A},
    {0x1F5C, 0x1F5C},
    {0x1F5E, 0x1F5E},
    {0x1F7E, 0x1F7F},
    {0x1FB5, 0x1FB5},
    {0x1FBD, 0x1FBD},
    {0x1FBF, 0x1FC1},
    {0x1FC5, 0x1FC5},
    {0x1FCD, 0x1FCF},
    {0x1FD4, 0x1FD5},
    {0x1FDC, 0x1FDF},
    {0x1FED, 0x1FF1},
    {0x1FF5, 0x1FF5},
    {0x1FFD, 0x1FFF},
    {0x200B, 0x2027},
    {0x202A, 0x202E},
    {0x2030, 0x205E},
    {0x2060, 0x206F},
    {0x2072, 0x2073},
    {0x207A, 0x207E},
    {0x208A, 0x208F},
    {0x209D, 0x20CF},
    {0x20F1, 0x2101},
    {0x2103, 0x2106},
    {0x2108, 0x2109},
    {0x2114, 0x2114},
    {0x2116, 0x2118},
    {0x211E, 0x2123},
    {0x2125, 0x2125},
    {0x2127, 0x2127},
    {0x2129, 0x2129},
    {0x212E, 0x212E},
    {0x213A, 0x213B},
    {0x2140, 0x2144},
    {0x214A, 0x214D},
    {0x214F, 0x214F},
    {0x218A, 0x245F},
    {0x249C, 0x24E9},
    {0x2500, 0x2775},
    {0x2794, 0x2BFF},
    {0x2C2F, 0x2C2F},
    {0x2C5F, 0x2C5F},
    {0x2CE5, 0x2CEA},
    {0x2CF4, 0x2CFC},
    {0x2CFE, 0x2CFF},
    {0x2D26, 0x2D26},
    {0x2D28, 0x2D2C},
    {0x2D2E, 0x2D2F},
    {0x2D68, 0x2D6E},
    {0x2D70, 0x2D7E},
    {0x2D97, 0x2D9F},
    {0x2DA7, 0x2DA7},
    {0x2DAF, 0x2DAF},
    {0x2DB7, 0x2DB7},
    {0x2DBF, 0x2DBF},
    {0x2DC7, 0x2DC7},
    {0x2DCF, 0x2DCF},
    {0x2DD7, 0x2DD7},
    {0x2DDF, 0x2DDF},
    {0x2E00, 0x2E2E},
    {0x2E30, 0x2FFF},
    {0x3001, 0x3004},
    {0x3008, 0x3020},
    {0x3030, 0x3030},
    {0x3036, 0x3037},
    {0x303D, 0x3040},
    {0x3097, 0x3098},
    {0x309B, 0x309C},
    {0x30A0, 0x30A0},
    {0x30FB, 0x30FB},
    {0x3100, 0x3104},
    {0x3130, 0x3130},
    {0x318F, 0x3191},
    {0x3196, 0x319F},
    {0x31C0, 0x31EF},
    {0x3200, 0x321F},
    {0x322A, 0x3247},
    {0x3250, 0x3250},
    {0x3260, 0x327F},
    {0x328A, 0x32B0},
    {0x32C0, 0x33FF},
    {0x4DC0, 0x4DFF},
    {0x9FFD, 0x9FFF},
    {0xA48D, 0xA4CF},
    {0xA4FE, 0xA4FF},
    {0xA60D, 0xA60F},
    {0xA62C, 0xA63F},
    {0xA673, 0xA673},
    {0xA67E, 0xA67E},
    {0xA6F2, 0xA716},
    {0xA720, 0xA721},
    {0xA789, 0xA78A},
    {0xA7C0, 0xA7C1},
    {0xA7CB, 0xA7F4},
    {0xA828, 0xA82B},
    {0xA82D, 0xA82F},
    {0xA836, 0xA83F},
    {0xA874, 0xA87F},
    {0xA8C6, 0xA8CF},
    {0xA8DA, 0xA8DF},
    {0xA8F8, 0xA8FA},
    {0xA8FC, 0xA8FC},
    {0xA92E, 0xA92F},
    {0xA954, 0xA95F},
    {0xA97D, 0xA97F},
    {0xA9C1, 0xA9CE},
    {0xA9DA, 0xA9DF},
    {0xA9FF, 0xA9FF},
    {0xAA37, 0xAA3F},
    {0xAA4E, 0xAA4F},
    {0xAA5A, 0xAA5F},
    {0xAA77, 0xAA79},
    {0xAAC3, 0xAADA},
    {0xAADE, 0xAADF},
    {0xAAF0, 0xAAF1},
    {0xAAF7, 0xAB00},
    {0xAB07, 0xAB08},
    {0xAB0F, 0xAB10},
    {0xAB17, 0xAB1F},
    {0xAB27, 0xAB27},
    {0xAB2F, 0xAB2F},
    {0xAB5B, 0xAB5B},
    {0xAB6A, 0xAB6F},
    {0xABEB, 0xABEB},
    {0xABEE, 0xABEF},
    {0xABFA, 0xABFF},
    {0xD7A4, 0xD7AF},
    {0xD7C7, 0xD7CA},
    {0xD7FC, 0xF8FF},
    {0xFA6E, 0xFA6F},
    {0xFADA, 0xFAFF},
    {0xFB07, 0xFB12},
    {0xFB18, 0xFB1C},
    {0xFB29, 0xFB29},
    {0xFB37, 0xFB37},
    {0xFB3D, 0xFB3D},
    {0xFB3F, 0xFB3F},
    {0xFB42, 0xFB42},
    {0xFB45, 0xFB45},
    {0xFBB2, 0xFBD2},
    {0xFD3E, 0xFD4F},
    {0xFD90, 0xFD91},
    {0xFDC8, 0xFDEF},
    {0xFDFC, 0xFDFF},
    {0xFE10, 0xFE1F},
    {0xFE30, 0xFE6F},
    {0xFE75, 0xFE75},
    {0xFEFD, 0xFF0F},
    {0xFF1A, 0xFF20},
    {0xFF3B, 0xFF40},
    {0xFF5B, 0xFF65},
    {0xFFBF, 0xFFC1},
    {0xFFC8, 0xFFC9},
    {0xFFD0, 0xFFD1},
    {0xFFD8, 0xFFD9},
    {0xFFDD, 0xFFFF},
    {0x1000C, 0x1000C},
    {0x10027, 0x10027},
    {0x1003B, 0x1003B},
    {0x1003E, 0x1003E},
    {0x1004E, 0x1004F},
    {0x1005E, 0x1007F},
    {0x100FB, 0x10106},
    {0x10134, 0x1013F},
    {0x10179, 0x10189},
    {0x1018C, 0x101FC},
    {0x101FE, 0x1027F},
    {0x1029D, 0x1029F},
    {0x102D1, 0x102DF},
    {0x102FC, 0x102FF},
    {0x10324, 0x1032C},
    {0x1034B, 0x1034F},
    {0x1037B, 0x1037F},
    {0x1039E, 0x1039F},
    {0x103C4, 0x103C7},
    {0x103D0, 0x103D0},
    {0x103D6, 0x103FF},
    {0x1049E, 0x1049F},
    {0x104AA, 0x104AF},
    {0x104D4, 0x104D7},
    {0x104FC, 0x104FF},
    {0x10528, 0x1052F},
    {0x10564, 0x105FF},
    {0x10737, 0x1073F},
    {0x10756, 0x1075F},
    {0x10768, 0x107FF},
    {0x10806, 0x10807},
    {0x10809, 0x10809},
    {0x10836, 0x10836},
    {0x10839, 0x1083B},
    {0x1083D, 0x1083E},
    {0x10856, 0x10857},
    {0x10877, 0x10878},
    {0x1089F, 0x108A6},
    {0x108B0, 0x108DF},
    {0x108F3, 0x108F3},
    {0x108F6, 0x108FA},
    {0x1091C, 0x1091F},
    {0x1093A, 0x1097F},
    {0x109B8, 0x109BB},
    {0x109D0, 0x109D1},
    {0x10A04, 0x10A04},
    {0x10A07, 0x10A0B},
    {0x10A14, 0x10A14},
    {0x10A18, 0x10A18},
    {0x10A36, 0x10A37},
    {0x10A3B, 0x10A3E},
    {0x10A49, 0x10A5F},
    {0x10A7F, 0x10A7F},
    {0x10AA0, 0x10ABF},
    {0x10AC8, 0x10AC8},
    {0x10AE7, 0x10AEA},
    {0x10AF0, 0x10AFF},
    {0x10B36, 0x10B3F},
    {0x10B56, 0x10B57},
    {0x10B73, 0x10B77},
    {0x10B92, 0x10BA8},
    {0x10BB0, 0x10BFF},
    {0x10C49, 0x10C7F},
    {0x10CB3, 0x10CBF},
    {0x10CF3, 0x10CF9},
    {0x10D28, 0x10D2F},
    {0x10D3A, 0x10E5F},
    {0x10E7F, 0x10E7F},
    {0x10EAA, 0x10EAA},
    {0x10EAD, 0x10EAF},
    {0x10EB2, 0x10EFF},
    {0x10F28, 0x10F2F},
    {0x10F55, 0x10FAF},
    {0x10FCC, 0x10FDF},
    {0x10FF7, 0x10FFF},
    {0x11047, 0x11051},
    {0x11070, 0x1107E},
    {0x110BB, 0x110CF},
    {0x110E9, 0x110EF},
    {0x110FA, 0x110FF},
    {0x11135, 0x11135},
    {0x11140, 0x11143},
    {0x11148, 0x1114F},
    {0x11174, 0x11175},
    {0x11177, 0x1117F},
    {0x111C5, 0x111C8},
    {0x111CD, 0x111CD},
    {0x111DB, 0x111DB},
    {0x111DD, 0x111E0},
    {0x111F5, 0x111FF},
    {0x11212, 0x11212},
    {0x11238, 0x1123D},
    {0x1123F, 0x1127F},
    {0x11287, 0x11287},
    {0x11289, 0x11289},
    {0x1128E, 0x1128E},
    {0x1129E, 0x1129E},
    {0x112A9, 0x112AF},
    {0x112EB, 0x112EF},
    {0x112FA, 0x112FF},
    {0x11304, 0x11304},
    {0x1130D, 0x1130E},
    {0x11311, 0x11312},
    {0x11329, 0x11329},
    {0x11331, 0x11331},
    {0x11334, 0x11334},
    {0x1133A, 0x1133A},
    {0x11345, 0x11346},
    {0x11349, 0x1134A},
    {0x1134E, 0x1134F},
    {0x11351, 0x11356},
    {0x11358, 0x1135C},
    {0x11364, 0x11365},
    {0x1136D, 0x1136F},
    {0x11375, 0x113FF},
    {0x1144B, 0x1144F},
    {0x1145A, 0x1145D},
    {0x11462, 0x1147F},
    {0x114C6, 0x114C6},
    {0x114C8, 0x114CF},
    {0x114DA, 0x1157F},
    {0x115B6, 0x115B7},
    {0x115C1, 0x115D7},
    {0x115DE, 0x115FF},
    {0x11641, 0x11643},
    {0x11645, 0x1164F},
    {0x1165A, 0x1167F},
    {0x116B9, 0x116BF},
    {0x116CA, 0x116FF},
    {0x1171B, 0x1171C},
    {0x1172C, 0x1172F},
    {0x1173C, 0x117FF},
    {0x1183B, 0x1189F},
    {0x118F3, 0x118FE},
    {0x11907, 0x11908},
    {0x1190A, 0x1190B},
    {0x11914, 0x11914},
    {0x11917, 0x11917},
    {0x11936, 0x11936},
    {0x11939, 0x1193A},
    {0x11944, 0x1194F},
    {0x1195A, 0x1199F},
    {0x119A8, 0x119A9},
    {0x119D8, 0x119D9},
    {0x119E2, 0x119E2},
    {0x119E5, 0x119FF},
    {0x11A3F, 0x11A46},
    {0x11A48, 0x11A4F},
    {0x11A9A, 0x11A9C},
    {0x11A9E, 0x11ABF},
    {0x11AF9, 0x11BFF},
    {0x11C09, 0x11C09},
    {0x11C37, 0x11C37},
    {0x11C41, 0x11C4F},
    {0x11C6D, 0x11C71},
    {0x11C90, 0x11C91},
    {0x11CA8, 0x11CA8},
    {0x11CB7, 0x11CFF},
    {0x11D07, 0x11D07},
    {0x11D0A, 0x11D0A},
    {0x11D37, 0x11D39},
    {0x11D3B, 0x11D3B},
    {0x11D3E, 0x11D3E},
    {0x11D48, 0x11D4F},
    {0x11D5A, 0x11D5F},
    {0x11D66, 0x11D66},
    {0x11D69, 0x11D69},
    {0x11D8F, 0x11D8F},
    {0x11D92, 0x11D92},
    {0x11D99, 0x11D9F},
    {0x11DAA, 0x11EDF},
    {0x11EF7, 0x11FAF},
    {0x11FB1, 0x11FBF},
    {0x11FD5, 0x11FFF},
    {0x1239A, 0x123FF},
    {0x1246F, 0x1247F},
    {0x12544, 0x12FFF},
    {0x1342F, 0x143FF},
    {0x14647, 0x167FF},
    {0x16A39, 0x16A3F},
    {0x16A5F, 0x16A5F},
    {0x16A6A, 0x16ACF},
    {0x16AEE, 0x16AEF},
    {0x16AF5, 0x16AFF},
    {0x16B37, 0x16B3F},
    {0x16B44, 0x16B4F},
    {0x16B5A, 0x16B5A},
    {0x16B62, 0x16B62},
    {0x16B78, 0x16B7C},
    {0x16B90, 0x16E3F},
    {0x16E97, 0x16EFF},
    {0x16F4B, 0x16F4E},
    {0x16F88, 0x16F8E},
    {0x16FA0, 0x16FDF},
    {0x16FE2, 0x16FE2},
    {0x16FE5, 0x16FEF},
    {0x16FF2, 0x16FFF},
    {0x187F8, 0x187FF},
    {0x18CD6, 0x18CFF},
    {0x18D09, 0x1AFFF},
    {0x1B11F, 0x1B14F},
    {0x1B153, 0x1B163},
    {0x1B168, 0x1B16F},
    {0x1B2FC, 0x1BBFF},
    {0x1BC6B, 0x1BC6F},
    {0x1BC7D, 0x1BC7F},
    {0x1BC89, 0x1BC8F},
    {0x1BC9A, 0x1BC9C},
    {0x1BC9F, 0x1D164},
    {0x1D16A, 0x1D16C},
    {0x1D173, 0x1D17A},
    {0x1D183, 0x1D184},
    {0x1D18C, 0x1D1A9},
    {0x1D1AE, 0x1D241},
    {0x1D245, 0x1D2DF},
    {0x1D2F4, 0x1D35F},
    {0x1D379, 0x1D3FF},
    {0x1D455, 0x1D455},
    {0x1D49D, 0x1D49D},
    {0x1D4A0, 0x1D4A1},
    {0x1D4A3, 0x1D4A4},
    {0x1D4A7, 0x1D4A8},
    {0x1D4AD, 0x1D4AD},
    {0x1D4BA, 0x1D4BA},
    {0x1D4BC, 0x1D4BC},
    {0x1D4C4, 0x1D4C4},
    {0x1D506, 0x1D506},
    {0x1D50B, 0x1D50C},
    {0x1D515, 0x1D515},
    {0x1D51D, 0x1D51D},
    {0x1D53A, 0x1D53A},
    {0x1D53F, 0x1D53F},
    {0x1D545, 0x1D545},
    {0x1D547, 0x1D549},
    {0x1D551, 0x1D551},
    {0x1D6A6, 0x1D6A7},
    {0x1D6C1, 0x1D6C1},
    {0x1D6DB, 0x1D6DB},
    {0x1D6FB, 0x1D6FB},
    {0x1D715, 0x1D715},
    {0x1D735, 0x1D735},
    {0x1D74F, 0x1D74F},
    {0x1D76F, 0x1D76F},
    {0x1D789, 0x1D789},
    {0x1D7A9, 0x1D7A9},
    {0x1D7C3, 0x1D7C3},
    {0x1D7CC, 0x1D7CD},
    {0x1D800, 0x1D9FF},
    {0x1DA37, 0x1DA3A},
    {0x1DA6D, 0x1DA74},
    {0x1DA76, 0x1DA83},
    {0x1DA85, 0x1DA9A},
    {0x1DAA0, 0x1DAA0},
    {0x1DAB0, 0x1DFFF},
    {0x1E007, 0x1E007},
    {0x1E019, 0x1E01A},
    {0x1E022, 0x1E022},
    {0x1E025, 0x1E025},
    {0x1E02B, 0x1E0FF},
    {0x1E12D, 0x1E12F},
    {0x1E13E, 0x1E13F},
    {0x1E14A, 0x1E14D},
    {0x1E14F, 0x1E2BF},
    {0x1E2FA, 0x1E7FF},
    {0x1E8C5, 0x1E8C6},
    {0x1E8D7, 0x1E8FF},
    {0x1E94C, 0x1E94F},
    {0x1E95A, 0x1EC70},
    {0x1ECAC, 0x1ECAC},
    {0x1ECB0, 0x1ECB0},
    {0x1ECB5, 0x1ED00},
    {0x1ED2E, 0x1ED2E},
    {0x1ED3E, 0x1EDFF},
    {0x1EE04, 0x1EE04},
    {0x1EE20, 0x1EE20},
    {0x1EE23, 0x1EE23},
    {0x1EE25, 0x1EE26},
    {0x1EE28, 0x1EE28},
    {0x1EE33, 0x1EE33},
    {0x1EE38, 0x1EE38},
    {0x1EE3A, 0x1EE3A},
    {0x1EE3C, 0x1EE41},
    {0x1EE43, 0x1EE46},
    {0x1EE48, 0x1EE48},
    {0x1EE4A, 0x1EE4A},
    {0x1EE4C, 0x1EE4C},
    {0x1EE50, 0x1EE50},
    {0x1EE53, 0x1EE53},
    {0x1EE55, 0x1EE56},
    {0x1EE58, 0x1EE58},
    {0x1EE5A, 0x1EE5A},
    {0x1EE5C, 0x1EE5C},
    {0x1EE5E, 0x1EE5E},
    {0x1EE60, 0x1EE60},
    {0x1EE63, 0x1EE63},
    {0x1EE65, 0x1EE66},
    {0x1EE6B, 0x1EE6B},
    {0x1EE73, 0x1EE73},
    {0x1EE78, 0x1EE78},
    {0x1EE7D, 0x1EE7D},
    {0x1EE7F, 0x1EE7F},
    {0x1EE8A, 0x1EE8A},
    {0x1EE9C, 0x1EEA0},
    {0x1EEA4, 0x1EEA4},
    {0x1EEAA, 0x1EEAA},
    {0x1EEBC, 0x1F0FF},
    {0x1F10D, 0x1FBEF},
    {0x1FBFA, 0x1FFFF},
    {0x2A6DE, 0x2A6FF},
    {0x2B735, 0x2B73F},
    {0x2B81E, 0x2B81F},
    {0x2CEA2, 0x2CEAF},
    {0x2EBE1, 0x2F7FF},
    {0x2FA1E, 0x2FFFF},
    {0x3134B, 0xE00FF},
    {0xE01F0, 0x10FFFF},
};
const std::size_t kRemovableRangesSize = sizeof(kRemovableRanges) / sizeof(kRemovableRanges[0]);

const CaseMapping kLatinLower[] = {
    {0x0041, 0x0061},
    {0x0042, 0x0062},
    {0x0043, 0x0063},
    {0x0044, 0x0064},
    {0x0045, 0x0065},
    {0x0046, 0x0066},
    {0x0047, 0x0067},
    {0x0048, 0x0068},
    {0x0049, 0x0069},
    {0x004A, 0x006A},
    {0x004B, 0x006B},
    {0x004C, 0x006C},
    {0x004D, 0x006D},
    {0x004E, 0x006E},
    {0x004F, 0x006F},
    {0x0050, 0x0070},
    {0x0051, 0x0071},
    {0x0052, 0x0072},
    {0x0053, 0x0073},
    {0x0054, 0x0074},
    {0x0055, 0x0075},
    {0x0056, 0x0076},
    {0x0057, 0x0077},
    {0x0058, 0x0078},
    {0x0059, 0x0079},
    {0x005A, 0x007A},
    {0x00C0, 0x00E0},
    {0x00C1, 0x00E1},
    {0x00C2, 0x00E2},
    {0x00C3, 0x00E3},
    {0x00C4, 0x00E4},
    {0x00C5, 0x00E5},
    {0x00C6, 0x00E6},
    {0x00C7, 0x00E7},
    {0x00C8, 0x00E8},
    {0x00C9, 0x00E9},
    {0x00CA, 0x00EA},
    {0x00CB, 0x00EB},
    {0x00CC, 0x00EC},
    {0x00CD, 0x00ED},
    {0x00CE, 0x00EE},
    {0x00CF, 0x00EF},
    {0x00D0, 0x00F0},
    {0x00D1, 0x00F1},
    {0x00D2, 0x00F2},
    {0x00D3, 0x00F3},
    {0x00D4, 0x00F4},
    {0x00D5, 0x00F5},
    {0x00D6, 0x00F6},
    {0x00D8, 0x00F8},
    {0x00D9, 0x00F9},
    {0x00DA, 0x00FA},
    {0x00DB, 0x00FB},
    {0x00DC, 0x00FC},
    {0x00DD, 0x00FD},
    {0x00DE, 0x00FE},
    {0x0100, 0x0101},
    {0x0102, 0x0103},
    {0x0104, 0x0105},
    {0x0106, 0x0107},
    {0x0108, 0x0109},
    {0x010A, 0x010B},
    {0x010C, 0x010D},
    {0x010E, 0x010F},
    {0x0110, 0x0111},
    {0x0112, 0x0113},
    {0x0114, 0x0115},
    {0x0116, 0x0117},
    {0x0118, 0x0119},
    {0x011A, 0x011B},
    {0x011C, 0x011D},
    {0x011E, 0x011F},
    {0x0120, 0x0121},
    {0x0122, 0x0123},
    {0x0124, 0x0125},
    {0x0126, 0x0127},
    {0x0128, 0x0129},
    {0x012A, 0x012B},
    {0x012C, 0x012D},
    {0x012E, 0x012F},
    {0x0132, 0x0133},
    {0x0134, 0x0135},
    {0x0136, 0x0137},
    {0x0139, 0x013A},
    {0x013B, 0x013C},
    {0x013D, 0x013E},
    {0x013F, 0x0140},
    {0x0141, 0x0142},
    {0x0143, 0x0144},
    {0x0145, 0x0146},
    {0x0147, 0x0148},
    {0x014A, 0x014B},
    {0x014C, 0x014D},
    {0x014E, 0x014F},
    {0x0150, 0x0151},
    {0x0152, 0x0153},
    {0x0154, 0x0155},
    {0x0156, 0x0157},
    {0x0158, 0x0159},
    {0x015A, 0x015B},
    {0x015C, 0x015D},
    {0x015E, 0x015F},
    {0x0160, 0x0161},
    {0x0162, 0x0163},
    {0x0164, 0x0165},
    {0x0166, 0x0167},
    {0x0168, 0x0169},
    {0x016A, 0x016B},
    {0x016C, 0x016D},
    {0x016E, 0x016F},
    {0x0170, 0x0171},
    {0x0172, 0x0173},
    {0x0174, 0x0175},
    {0x0176, 0x0177},
    {0x0178, 0x00FF},
    {0x0179, 0x017A},
    {0x017B, 0x017C},
    {0x017D, 0x017E},
    {0x0181, 0x0253},
    {0x0182, 0x0183},
    {0x0184, 0x0185},
    {0x0186, 0x0254},
    {0x0187, 0x0188},
    {0x0189, 0x0256},
    {0x018A, 0x0257},
    {0x018B, 0x018C},
    {0x018E, 0x01DD},
    {0x018F, 0x0259},
    {0x0190, 0x025B},
    {0x0191, 0x0192},
    {0x0193, 0x0260},
    {0x0194, 0x0263},
    {0x0196, 0x0269},
    {0x0197, 0x0268},
    {0x0198, 0x0199},
    {0x019C, 0x026F},
    {0x019D, 0x0272},
    {0x019F, 0x0275},
    {0x01A0, 0x01A1},
    {0x01A2, 0x01A3},
    {0x01A4, 0x01A5},
    {0x01A6, 0x0280},
    {0x01A7, 0x01A8},
    {0x01A9, 0x0283},
    {0x01AC, 0x01AD},
    {0x01AE, 0x0288},
    {0x01AF, 0x01B0},
    {0x01B1, 0x028A},
    {0x01B2, 0x028B},
    {0x01B3, 0x01B4},
    {0x01B5, 0x01B6},
    {0x01B7, 0x0292},
    {0x01B8, 0x01B9},
    {0x01BC, 0x01BD},
    {0x01C4, 0x01C6},
    {0x01C7, 0x01C9},
    {0x01CA, 0x01CC},
    {0x01CD, 0x01CE},
    {0x01CF, 0x01D0},
    {0x01D1, 0x01D2},
    {0x01D3, 0x01D4},
    {0x01D5, 0x01D6},
    {0x01D7, 0x01D8},
    {0x01D9, 0x01DA},
    {0x01DB, 0x01DC},
    {0x01DE, 0x01DF},
    {0x01E0, 0x01E1},
    {0x01E2, 0x01E3},
    {0x01E4, 0x01E5},
    {0x01E6, 0x01E7},
    {0x01E8, 0x01E9},
    {0x01EA, 0x01EB},
    {0x01EC, 0x01ED},
    {0x01EE, 0x01EF},
    {0x01F1, 0x01F3},
    {0x01F4, 0x01F5},
    {0x01F6, 0x0195},
    {0x01F7, 0x01BF},
    {0x01F8, 0x01F9},
    {0x01FA, 0x01FB},
    {0x01FC, 0x01FD},
    {0x01FE, 0x01FF},
    {0x0200, 0x0201},
    {0x0202, 0x0203},
    {0x0204, 0x0205},
    {0x0206, 0x0207},
    {0x0208, 0x0209},
    {0x020A, 0x020B},
    {0x020C, 0x020D},
    {0x020E, 0x020F},
    {0x0210, 0x0211},
    {0x0212, 0x0213},
    {0x0214, 0x0215},
    {0x0216, 0x0217},
    {0x0218, 0x0219},
    {0x021A, 0x021B},
    {0x021C, 0x021D},
    {0x021E, 0x021F},
    {0x0220, 0x019E},
    {0x0222, 0x0223},
    {0x0224, 0x0225},
    {0x0226, 0x0227},
    {0x0228, 0x0229},
    {0x022A, 0x022B},
    {0x022C, 0x022D},
    {0x022E, 0x022F},
    {0x0230, 0x0231},
    {0x0232, 0x0233},
    {0x023A, 0x2C65},
    {0x023B, 0x023C},
    {0x023D, 0x019A},
    {0x023E, 0x2C66},
    {0x0241, 0x0242},
    {0x0243, 0x0180},
    {0x0244, 0x0289},
    {0x0245, 0x028C},
    {0x0246, 0x0247},
    {0x0248, 0x0249},
    {0x024A, 0x024B},
    {0x024C, 0x024D},
    {0x024E, 0x024F},
    {0x1E00, 0x1E01},
    {0x1E02, 0x1E03},
    {0x1E04, 0x1E05},
    {0x1E06, 0x1E07},
    {0x1E08, 0x1E09},
    {0x1E0A, 0x1E0B},
    {0x1E0C, 0x1E0D},
    {0x1E0E, 0x1E0F},
    {0x1E10, 0x1E11},
    {0x1E12, 0x1E13},
    {0x1E14, 0x1E15},
    {0x1E16, 0x1E17},
    {0x1E18, 0x1E19},
    {0x1E1A, 0x1E1B},
    {0x1E1C, 0x1E1D},
    {0x1E1E, 0x1E1F},
    {0x1E20, 0x1E21},
    {0x1E22, 0x1E23},
    {0x1E24, 0x1E25},
    {0x1E26, 0x1E27},
    {0x1E28, 0x1E29},
    {0x1E2A, 0x1E2B},
    {0x1E2C, 0x1E2D},
    {0x1E2E, 0x1E2F},
    {0x1E30, 0x1E31},
    {0x1E32, 0x1E33},
    {0x1E34, 0x1E35},
    {0x1E36, 0x1E37},
    {0x1E38, 0x1E39},
    {0x1E3A, 0x1E3B},
    {0x1E3C, 0x1E3D},
    {0x1E3E, 0x1E3F},
    {0x1E40, 0x1E41},
    {0x1E42, 0x1E43},
    {0x1E44, 0x1E45},
    {0x1E46, 0x1E47},
    {0x1E48, 0x1E49},
    {0x1E4A, 0x1E4B},
    {0x1E4C, 0x1E4D},
    {0x1E4E, 0x1E4F},
    {0x1E50, 0x1E51},
    {0x1E52, 0x1E53},
    {0x1E54, 0x1E55},
    {0x1E56, 0x1E57},
    {0x1E58, 0x1E59},
    {0x1E5A, 0x1E5B},
    {0x1E5C, 0x1E5D},
    {0x1E5E, 0x1E5F},
    {0x1E60, 0x1E61},
    {0x1E62, 0x1E63},
    {0x1E64, 0x1E65},
    {0x1E66, 0x1E67},
    {0x1E68, 0x1E69},
    {0x1E6A, 0x1E6B},
    {0x1E6C, 0x1E6D},
    {0x1E6E, 0x1E6F},
    {0x1E70, 0x1E71},
    {0x1E72, 0x1E73},
    {0x1E74, 0x1E75},
    {0x1E76, 0x1E77},
    {0x1E78, 0x1E79},
    {0x1E7A, 0x1E7B},
    {0x1E7C, 0x1E7D},
    {0x1E7E, 0x1E7F},
    {0x1E80, 0x1E81},
    {0x1E82, 0x1E83},
    {0x1E84, 0x1E85},
    {0x1E86, 0x1E87},
    {0x1E88, 0x1E89},
    {0x1E8A, 0x1E8B},
    {0x1E8C, 0x1E8D},
    {0x1E8E, 0x1E8F},
    {0x1E90, 0x1E91},
    {0x1E92, 0x1E93},
    {0x1E94, 0x1E95},
    {0x1E9E, 0x00DF},
    {0x1EA0, 0x1EA1},
    {0x1EA2, 0x1EA3},
    {0x1EA4, 0x1EA5},
    {0x1EA6, 0x1EA7},
    {0x1EA8, 0x1EA9},
    {0x1EAA, 0x1EAB},
    {0x1EAC, 0x1EAD},
    {0x1EAE, 0x1EAF},
    {0x1EB0, 0x1EB1},
    {0x1EB2, 0x1EB3},
    {0x1EB4, 0x1EB5},
    {0x1EB6, 0x1EB7},
    {0x1EB8, 0x1EB9},
    {0x1EBA, 0x1EBB},
    {0x1EBC, 0x1EBD},
    {0x1EBE, 0x1EBF},
    {0x1EC0, 0x1EC1},
    {0x1EC2, 0x1EC3},
    {0x1EC4, 0x1EC5},
    {0x1EC6, 0x1EC7},
    {0x1EC8, 0x1EC9},
    {0x1ECA, 0x1ECB},
    {0x1ECC, 0x1ECD},
    {0x1ECE, 0x1ECF},
    {0x1ED0, 0x1ED1},
    {0x1ED2, 0x1ED3},
    {0x1ED4, 0x1ED5},
    {0x1ED6, 0x1ED7},
    {0x1ED8, 0x1ED9},
    {0x1EDA, 0x1EDB},
    {0x1EDC, 0x1EDD},
    {0x1EDE, 0x1EDF},
    {0x1EE0, 0x1EE1},
    {0x1EE2, 0x1EE3},
    {0x1EE4, 0x1EE5},
    {0x1EE6, 0x1EE7},
    {0x1EE8, 0x1EE9},
    {0x1EEA, 0x1EEB},
    {0x1EEC, 0x1EED},
    {0x1EEE, 0x1EEF},
    {0x1EF0, 0x1EF1},
    {0x1EF2, 0x1EF3},
    {0x1EF4, 0x1EF5},
    {0x1EF6, 0x1EF7},
    {0x1EF8, 0x1EF9},
    {0x1EFA, 0x1EFB},
    {0x1EFC, 0x1EFD},
    {0x1EFE, 0x1EFF},
    {0x2C2E, 0x2C5E},
    {0x2C60, 0x2C61},
    {0x2C62, 0x026B},
    {0x2C63, 0x1D7D},
    {0x2C64, 0x027D},
    {0x2C67, 0x2C68},
    {0x2C69, 0x2C6A},
    {0x2C6B, 0x2C6C},
    {0x2C6D, 0x0251},
    {0x2C6E, 0x0271},
    {0x2C6F, 0x0250},
    {0x2C70, 0x0252},
    {0x2C72, 0x2C73},
    {0x2C75, 0x2C76},
    {0x2C7E, 0x023F},
    {0x2C7F, 0x0240},
    {0xA722, 0xA723},
    {0xA724, 0xA725},
    {0xA726, 0xA727},
    {0xA728, 0xA729},
    {0xA72A, 0xA72B},
    {0xA72C, 0xA72D},
    {0xA72E, 0xA72F},
    {0xA732, 0xA733},
    {0xA734, 0xA735},
    {0xA736, 0xA737},
    {0xA738, 0xA739},
    {0xA73A, 0xA73B},
    {0xA73C, 0xA73D},
    {0xA73E, 0xA73F},
    {0xA740, 0xA741},
    {0xA742, 0xA743},
    {0xA744, 0xA745},
    {0xA746, 0xA747},
    {0xA748, 0xA749},
    {0xA74A, 0xA74B},
    {0xA74C, 0xA74D},
    {0xA74E, 0xA74F},
    {0xA750, 0xA751},
    {0xA752, 0xA753},
    {0xA754, 0xA755},
    {0xA756, 0xA757},
    {0xA758, 0xA759},
    {0xA75A, 0xA75B},
    {0xA75C, 0xA75D},
    {0xA75E, 0xA75F},
    {0xA760, 0xA761},
    {0xA762, 0xA763},
    {0xA764, 0xA765},
    {0xA766, 0xA767},
    {0xA768, 0xA769},
    {0xA76A, 0xA76B},
    {0xA76C, 0xA76D},
    {0xA76E, 0xA76F},
    {0xA779, 0xA77A},
    {0xA77B, 0xA77C},
    {0xA77D, 0x1D79},
    {0xA77E, 0xA77F},
    {0xA780, 0xA781},
    {0xA782, 0xA783},
    {0xA784, 0xA785},
    {0xA786, 0xA787},
    {0xA78B, 0xA78C},
    {0xA78D, 0x0265},
    {0xA790, 0xA791},
    {0xA792, 0xA793},
    {0xA796, 0xA797},
    {0xA798, 0xA799},
    {0xA79A, 0xA79B},
    {0xA79C, 0xA79D},
    {0xA79E, 0xA79F},
    {0xA7A0, 0xA7A1},
    {0xA7A2, 0xA7A3},
    {0xA7A4, 0xA7A5},
    {0xA7A6, 0xA7A7},
    {0xA7A8, 0xA7A9},
    {0xA7AA, 0x0266},
    {0xA7AB, 0x025C},
    {0xA7AC, 0x0261},
    {0xA7AD, 0x026C},
    {0xA7AE, 0x026A},
    {0xA7B0, 0x029E},
    {0xA7B1, 0x0287},
    {0xA7B2, 0x029D},
    {0xA7B3, 0xAB53},
    {0xA7B4, 0xA7B5},
    {0xA7B6, 0xA7B7},
    {0xA7B8, 0xA7B9},
    {0xA7BA, 0xA7BB},
    {0xA7BC, 0xA7BD},
    {0xA7BE, 0xA7BF},
    {0xA7C2, 0xA7C3},
    {0xA7C4, 0xA794},
    {0xA7C5, 0x0282},
    {0xA7C6, 0x1D8E},
    {0xA7C7, 0xA7C8},
    {0xA7C9, 0xA7CA},
    {0xA7F5, 0xA7F6},
    {0xFF21, 0xFF41},
    {0xFF22, 0xFF42},
    {0xFF23, 0xFF43},
    {0xFF24, 0xFF44},
    {0xFF25, 0xFF45},
    {0xFF26, 0xFF46},
    {0xFF27, 0xFF47},
    {0xFF28, 0xFF48},
    {0xFF29, 0xFF49},
    {0xFF2A, 0xFF4A},
    {0xFF2B, 0xFF4B},
    {0xFF2C, 0xFF4C},
    {0xFF2D, 0xFF4D},
    {0xFF2E, 0xFF4E},
    {0xFF2F, 0xFF4F},
    {0xFF30, 0xFF50},
    {0xFF31, 0xFF51},
    {0xFF32, 0xFF52},
    {0xFF33, 0xFF53},
    {0xFF34, 0xFF54},
    {0xFF35, 0xFF55},
    {0xFF36, 0xFF56},
    {0xFF37, 0xFF57},
    {0xFF38, 0xFF58},
    {0xFF39, 0xFF59},
    {0xFF3A, 0xFF5A},
};
const std::size_t kLatinLowerSize = sizeof(kLatinLower) / sizeof(kLatinLower[0]);

}  // namespace unicode
}  // namespace cstk
