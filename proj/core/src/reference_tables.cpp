#include "membank/reference_tables.hpp"

#include <array>

namespace membank {

namespace {

constexpr std::optional<double> none = std::nullopt;

// Transpose profiling. Fields: kernel, arch, {fp,int,imm,other}, load/store
// ops, tw ops, load cycles, tw cycles, store cycles, total, time,
// R eff, W eff, TW eff, compute eff.
const std::array<ReferenceRow, 51> kRows = {{
    {"transpose-32", "4r1w", {0, 256, 129, 6}, 64, 64, 0, 256, 0, 1024, 1671, 2.17, none, none, none, none},
    {"transpose-32", "4r2w", {0, 256, 129, 6}, 64, 64, 0, 256, 0, 512, 1159, 1.93, none, none, none, none},
    {"transpose-32", "banked16", {0, 256, 129, 6}, 64, 64, 0, 168, 0, 1054, 1613, 2.09, 38.1, 6.1, none, none},
    {"transpose-32", "banked16-offset2", {0, 256, 129, 6}, 64, 64, 0, 106, 0, 1050, 1547, 2.01, 60.4, 6.1, none, none},
    {"transpose-32", "banked8", {0, 256, 129, 6}, 64, 64, 0, 290, 0, 1048, 1729, 2.24, 22.1, 6.1, none, none},
    {"transpose-32", "banked8-offset2", {0, 256, 129, 6}, 64, 64, 0, 166, 0, 1048, 1605, 2.08, 38.6, 6.1, none, none},
    {"transpose-32", "banked4", {0, 256, 129, 6}, 64, 64, 0, 544, 0, 1046, 1981, 2.57, 11.8, 6.1, none, none},
    {"transpose-32", "banked4-offset2", {0, 256, 129, 6}, 64, 64, 0, 288, 0, 1046, 1725, 2.24, 22.2, 6.1, none, none},

    {"transpose-64", "4r1w", {0, 192, 161, 6}, 256, 256, 0, 1024, 0, 4096, 5479, 7.1, none, none, none, none},
    {"transpose-64", "4r2w", {0, 192, 161, 6}, 256, 256, 0, 1024, 0, 2048, 3431, 5.72, none, none, none, none},
    {"transpose-64", "banked16", {0, 192, 161, 6}, 256, 256, 0, 1184, 0, 4216, 5759, 7.46, 21.6, 6.1, none, none},
    {"transpose-64", "banked16-offset2", {0, 192, 161, 6}, 256, 256, 0, 672, 0, 4200, 5231, 6.78, 38.9, 6.1, none, none},
    {"transpose-64", "banked8", {0, 192, 161, 6}, 256, 256, 0, 2184, 0, 4192, 6735, 8.74, 11.7, 6.1, none, none},
    {"transpose-64", "banked8-offset2", {0, 192, 161, 6}, 256, 256, 0, 1160, 0, 4192, 5711, 7.41, 22.1, 6.1, none, none},
    {"transpose-64", "banked4", {0, 192, 161, 6}, 256, 256, 0, 4224, 0, 4184, 8767, 11.37, 6.1, 6.1, none, none},
    {"transpose-64", "banked4-offset2", {0, 192, 161, 6}, 256, 256, 0, 2176, 0, 4184, 6719, 8.71, 11.8, 6.1, none, none},

    {"transpose-128", "4r1w", {0, 160, 129, 6}, 1024, 1024, 0, 4096, 0, 16384, 20775, 26.95, none, none, none, none},
    {"transpose-128", "4r2w", {0, 160, 129, 6}, 1024, 1024, 0, 4096, 0, 8192, 12583, 20.97, none, none, none, none},
    {"transpose-128", "banked16", {0, 160, 129, 6}, 1024, 1024, 0, 8832, 0, 16864, 25991, 33.71, 11.6, 6.1, none, none},
    {"transpose-128", "banked16-offset2", {0, 160, 129, 6}, 1024, 1024, 0, 4672, 0, 16800, 21767, 28.23, 21.9, 6.1, none, none},
    {"transpose-128", "banked8", {0, 160, 129, 6}, 1024, 1024, 0, 16928, 0, 16768, 33991, 44.09, 6.0, 6.1, none, none},
    {"transpose-128", "banked8-offset2", {0, 160, 129, 6}, 1024, 1024, 0, 8736, 0, 16768, 25799, 33.46, 11.7, 6.1, none, none},
    {"transpose-128", "banked4", {0, 160, 129, 6}, 1024, 1024, 0, 16896, 0, 16736, 34017, 44.12, 6.1, 6.1, none, none},
    {"transpose-128", "banked4-offset2", {0, 160, 129, 6}, 1024, 1024, 0, 16896, 0, 16736, 34017, 44.12, 6.1, 6.1, none, none},

    // FFT profiling; read_eff carries the table's "D Bank Eff." which is not
    // exactly ops/cycles for either direction alone.
    {"fft-r4", "4r1w", {13440, 2880, 1287, 244}, 3072, 3072, 1920, 12228, 7680, 49152, 86817, 112.60, none, none, none, 15.5},
    {"fft-r4", "4r2w", {13440, 2880, 1287, 244}, 3072, 3072, 1920, 12228, 7680, 24576, 62214, 103.74, none, none, none, 21.6},
    {"fft-r4", "4r1w-vb", {13440, 2880, 1287, 244}, 3072, 3072, 1920, 12228, 7680, 24576, 62214, 80.69, none, none, none, 21.6},
    {"fft-r4", "banked16", {13440, 2880, 1287, 244}, 3072, 3072, 1920, 11200, 24152, 10960, 64063, 83.09, 28.0, none, 7.9, 21.0},
    {"fft-r4", "banked16-offset2", {13440, 2880, 1287, 244}, 3072, 3072, 1920, 7104, 21548, 6864, 53267, 69.09, 44.8, none, 8.9, 25.2},
    {"fft-r4", "banked8", {13440, 2880, 1287, 244}, 3072, 3072, 1920, 19248, 27134, 19008, 80361, 104.23, 16.2, none, 7.1, 16.7},
    {"fft-r4", "banked8-offset2", {13440, 2880, 1287, 244}, 3072, 3072, 1920, 11120, 24070, 10880, 63821, 82.78, 28.2, none, 8.0, 21.1},
    {"fft-r4", "banked4", {13440, 2880, 1287, 244}, 3072, 3072, 1920, 29440, 29152, 29200, 105543, 136.89, 10.5, none, 6.6, 12.7},
    {"fft-r4", "banked4-offset2", {13440, 2880, 1287, 244}, 3072, 3072, 1920, 19200, 27104, 18960, 82915, 107.54, 16.2, none, 7.1, 16.2},

    {"fft-r8", "4r1w", {11840, 3456, 523, 108}, 2048, 2048, 1344, 8192, 5376, 32768, 62263, 80.76, none, none, none, 19.0},
    {"fft-r8", "4r2w", {11840, 3456, 523, 108}, 2048, 2048, 1344, 8192, 5376, 16384, 45879, 76.47, none, none, none, 25.8},
    {"fft-r8", "4r1w-vb", {11840, 3456, 523, 108}, 2048, 2048, 1344, 8192, 5376, 20480, 49975, 64.82, none, none, none, 23.7},
    {"fft-r8", "banked16", {11840, 3456, 523, 108}, 2048, 2048, 1344, 12624, 16712, 12224, 57487, 74.56, 16.8, none, 8.0, 20.6},
    {"fft-r8", "banked16-offset2", {11840, 3456, 523, 108}, 2048, 2048, 1344, 7425, 13844, 7104, 44300, 57.46, 28.8, none, 9.7, 26.7},
    {"fft-r8", "banked8", {11840, 3456, 523, 108}, 2048, 2048, 1344, 15424, 18122, 15104, 64577, 83.76, 13.6, none, 7.4, 18.3},
    {"fft-r8", "banked8-offset2", {11840, 3456, 523, 108}, 2048, 2048, 1344, 12448, 16608, 12128, 57111, 74.07, 16.9, none, 8.1, 20.7},
    {"fft-r8", "banked4", {11840, 3456, 523, 108}, 2048, 2048, 1344, 21504, 20128, 21184, 78743, 102.13, 9.7, none, 6.7, 15.0},
    {"fft-r8", "banked4-offset2", {11840, 3456, 523, 108}, 2048, 2048, 1344, 15320, 18080, 15040, 65367, 84.78, 13.6, none, 7.4, 18.1},

    {"fft-r16", "4r1w", {12384, 2192, 276, 90}, 1536, 1536, 960, 6144, 3840, 24576, 49442, 64.13, none, none, none, 25.0},
    {"fft-r16", "4r2w", {12384, 2192, 276, 90}, 1536, 1536, 960, 6144, 3840, 12228, 37214, 62.02, none, none, none, 33.3},
    {"fft-r16", "4r1w-vb", {12384, 2192, 276, 90}, 1536, 1536, 960, 6144, 3840, 14336, 39262, 50.92, none, none, none, 31.5},
    {"fft-r16", "banked16", {12384, 2192, 276, 90}, 1536, 1536, 960, 12160, 10888, 11680, 49670, 64.53, 13.2, none, 8.8, 24.9},
    {"fft-r16", "banked16-offset2", {12384, 2192, 276, 90}, 1536, 1536, 960, 11136, 9848, 10652, 46578, 60.41, 14.4, none, 9.7, 26.6},
    {"fft-r16", "banked8", {12384, 2192, 276, 90}, 1536, 1536, 960, 13920, 14876, 13440, 57177, 74.16, 11.4, none, 6.4, 21.7},
    {"fft-r16", "banked8-offset2", {12384, 2192, 276, 90}, 1536, 1536, 960, 12000, 10780, 11520, 49242, 63.87, 13.3, none, 8.9, 25.1},
    {"fft-r16", "banked4", {12384, 2192, 276, 90}, 1536, 1536, 960, 17920, 14272, 17440, 64483, 83.64, 8.8, none, 6.7, 19.2},
    {"fft-r16", "banked4-offset2", {12384, 2192, 276, 90}, 1536, 1536, 960, 13824, 12244, 13344, 54354, 70.50, 11.5, none, 7.8, 22.8},
}};

}  // namespace

std::span<const ReferenceRow> reference_table() { return kRows; }

const ReferenceRow* find_reference(const std::string& kernel, const std::string& arch) {
  for (const ReferenceRow& row : kRows)
    if (kernel == row.kernel && arch == row.arch) return &row;
  return nullptr;
}

}  // namespace membank
