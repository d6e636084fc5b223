#pragma once

// Values transcribed from the published tables. Kept verbatim; the acceptance
// checks compare computed results against these strings and numbers.

#include <cstdint>
#include <string_view>
#include <vector>

namespace reference {

struct SuffixRow {
  unsigned length;
  std::vector<std::string_view> words;
  unsigned count;
};

inline const std::vector<SuffixRow> kSuffixTable = {
    {0, {""}, 1},
    {1, {"1"}, 1},
    {2, {"01", "11"}, 2},
    {3, {"011", "101", "111"}, 3},
    {4, {"0011", "0101", "0111", "1011", "1101", "1111"}, 6},
    {5, {"00111", "01011", "01101", "01111", "10011", "10101", "10111", "11011", "11101", "11111"}, 10},
    {6, {"000111", "001011", "001101", "001111", "010011", "010101", "010111", "011011", "011101", "011111", "100111", "101011", "101101", "101111", "110011", "110101", "110111", "111011", "111101", "111111"}, 20},
    {7, {"0001111", "0010111", "0011011", "0011101", "0011111", "0100111", "0101011", "0101101", "0101111", "0110011", "0110101", "0110111", "0111011", "0111101", "0111111", "1000111", "1001011", "1001101", "1001111", "1010011", "1010101", "1010111", "1011011", "1011101", "1011111", "1100111", "1101011", "1101101", "1101111", "1110011", "1110101", "1110111", "1111011", "1111101", "1111111"}, 35},
};

struct BijRow {
  std::uint64_t d;
  std::uint64_t image;
};

inline const std::vector<BijRow> kBijTable = {
    {1, 0},
    {3, 1},
    {5, 5},
    {7, 3},
    {11, 11},
    {13, 21},
    {15, 7},
    {19, 51},
    {21, 85},
    {23, 23},
    {27, 43},
    {29, 77},
    {31, 15},
    {39, 103},
    {43, 171},
    {45, 301},
    {47, 47},
    {51, 211},
    {53, 341},
    {55, 87},
    {59, 155},
    {61, 285},
    {63, 31},
};

struct ChainRow {
  std::uint64_t root;
  std::vector<std::string_view> terms;
};

inline const std::vector<ChainRow> kChainTable = {
    {13, {"21", "85", "1365", "349525", "22906492245", "98382635059784275285"}},
    {19, {"51", "211", "3411", "873811", "57266230611", "245956587649460688211"}},
    {27, {"43", "171", "2731", "699051", "45812984491", "196765270119568550571"}},
    {29, {"77", "1229", "314573", "20615843021", "88544371553805847757"}},
    {39, {"103", "423", "6823", "1747623", "114532461223", "491913175298921376423"}},
    {45, {"301", "19245", "78826285", "1322485604862765", "372246604828924506788714433325"}},
    {53, {"341", "21845", "89478485", "1501199875790165", "422550200076076467165567735125"}},
    {55, {"87", "343", "5463", "1398103", "91625968983", "393530540239137101143"}},
    {59, {"155", "2459", "629147", "41231686043", "177088743107611695515"}},
    {61, {"285", "18205", "74565405", "1250999896491805", "352125166730063722637973112605"}},
    {71, {"455", "7367", "1887431", "123695058119", "531266229322835086535"}},
    {75, {"715", "45771", "187478731", "3145371168322251", "885343276349874502632618111691"}},
    {79, {"207", "847", "13647", "3495247", "229064922447", "983826350597842752847"}},
    {83, {"851", "54611", "223696211", "3752999689475411", "1056375500190191167913919337811"}},
    {91, {"603", "38491", "157652571", "2644971209725531", "744493209657849013577428866651"}},
    {93, {"1117", "285789", "18729426013", "80442272195941260381"}},
};

// Eighth image of B in the chain rooted at 45.
inline constexpr std::string_view kDeepChainTerm =
    "7294370719381108647684094104522234227873623191532415823764"
    "4349723128743173836120373641271271949104360848312426404888"
    "5188931409036599976285503982592717761297150029639527256463"
    "5601246421380208566163140440656191662702607661408405605165"
    ;
inline constexpr std::size_t kDeepChainDigits = 232;
inline constexpr std::size_t kDeepChainBits = 771;

struct LevelSet {
  unsigned level;
  std::vector<std::uint64_t> terms;
};

// Symmetric terms other than Mersenne and self-bijective ones.
inline const std::vector<LevelSet> kSymmetricSets = {
    {5, {21}},
    {6, {43, 51}},
    {7, {77, 85, 87, 103}},
    {8, {155, 171, 175, 207, 211}},
    {9, {285, 301, 311, 341, 343, 351, 415, 423, 455}},
    {10, {571, 603, 623, 683, 687, 703, 715, 819, 831, 847, 851, 911}},
};

inline const std::vector<std::uint64_t> kSymmetricCounts = {  // levels 5..16
    1, 2, 4, 5, 9, 12, 19, 24, 38, 49, 75, 95};

inline const std::vector<LevelSet> kAsymmetricSets = {
    {4, {13}},
    {5, {19, 27, 29}},
    {6, {39, 45, 53, 55, 59, 61}},
    {7, {71, 75, 79, 83, 91, 93, 107, 109, 111, 115, 117, 119, 123, 125}},
    {8, {143, 151, 157, 159, 167, 173, 179, 181, 183, 187, 189, 199, 203, 205, 213, 215, 219, 221, 223, 231, 235, 237, 239, 243, 245, 247, 251, 253}},
};

inline const std::vector<std::uint64_t> kAsymmetricCounts = {  // levels 4..11
    1, 3, 6, 14, 28, 59, 112, 231};

}  // namespace reference
