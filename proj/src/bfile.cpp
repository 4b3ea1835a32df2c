#include "iterlog/bfile.hpp"

#include "iterlog/errors.hpp"

#include <fstream>
#include <sstream>

namespace iterlog {

BFile parse_bfile(std::istream& in, const std::string& source)
{
    BFile out;
    out.source = source;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        std::istringstream ss(line);
        std::string idx;
        std::string val;
        std::string extra;
        if (!(ss >> idx >> val) || (ss >> extra && extra.front() != '#')) {
            throw ParseError(source + ":" + std::to_string(lineno) + ": expected 'n value'");
        }
        try {
            const Integer n = parse_integer(idx);
            if (!n.fits_slong_p()) {
                throw ParseError("index out of range");
            }
            out.entries.push_back({n.get_si(), parse_integer(val)});
        } catch (const ParseError&) {
            throw ParseError(source + ":" + std::to_string(lineno) + ": bad integer in '" + line + "'");
        }
    }
    return out;
}

BFile read_bfile(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path);
    }
    return parse_bfile(in, path);
}

std::string to_bfile(const std::vector<Integer>& values, long first_index)
{
    std::string s;
    for (std::size_t k = 0; k < values.size(); ++k) {
        s += std::to_string(first_index + static_cast<long>(k)) + " " + values[k].get_str() + "\n";
    }
    return s;
}

namespace {

BFileComparison compare_at(const std::vector<Integer>& computed, const BFile& file, int offset)
{
    BFileComparison r;
    r.offset = offset;
    r.total = static_cast<long>(file.entries.size());
    for (const auto& e : file.entries) {
        const long k = e.index + offset;
        if (k < 1 || k > static_cast<long>(computed.size())) {
            continue;
        }
        ++r.compared;
        const Integer& c = computed[static_cast<std::size_t>(k - 1)];
        if (c != e.value) {
            r.mismatches.push_back({e.index, c, e.value});
        }
    }
    return r;
}

}  // namespace

BFileComparison compare_bfile(const std::vector<Integer>& computed, const BFile& file, int offset)
{
    BFileComparison r = compare_at(computed, file, offset);
    for (int o : {-1, 0, 1}) {
        if (compare_at(computed, file, o).ok()) {
            r.agreeing_offsets.push_back(o);
        }
    }
    return r;
}

}  // namespace iterlog
