#pragma once

// OEIS b-files: one "n a(n)" pair per line, '#' comments and blank lines
// ignored.

#include "iterlog/rational.hpp"

#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace iterlog {

struct BFileEntry {
    long index = 0;
    Integer value;
};

struct BFile {
    std::string source;
    std::vector<BFileEntry> entries;
};

BFile parse_bfile(std::istream& in, const std::string& source);
// Throws IoError if the file cannot be opened, ParseError on bad lines.
BFile read_bfile(const std::string& path);

std::string to_bfile(const std::vector<Integer>& values, long first_index = 1);

struct BFileMismatch {
    long index = 0;  // index in the file
    Integer computed;
    Integer file;
};

struct BFileComparison {
    int offset = 0;        // file term a(n) was compared with computed term n + offset
    long compared = 0;     // terms in the overlap
    long total = 0;        // terms in the file
    std::vector<BFileMismatch> mismatches;
    std::vector<int> agreeing_offsets;  // offsets in {-1, 0, 1} with a clean overlap

    bool ok() const { return mismatches.empty() && compared > 0; }
};

// computed[k] is the term with index k + 1.
BFileComparison compare_bfile(const std::vector<Integer>& computed, const BFile& file, int offset = 0);

}  // namespace iterlog
