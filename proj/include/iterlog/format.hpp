#pragma once

// Text and JSON renderings of windows and series.

#include "iterlog/series.hpp"
#include "iterlog/trimat.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace iterlog {

// {"dim": n, "entries": [row-major list of strings]}
template <CoeffRing T>
nlohmann::json window_to_json(const TriWindow<T>& m)
{
    nlohmann::json entries = nlohmann::json::array();
    for (int i = 0; i < m.size(); ++i) {
        for (int j = 0; j < m.size(); ++j) {
            entries.push_back(RingTraits<T>::to_string(m(i, j)));
        }
    }
    return {{"dim", m.size()}, {"entries", entries}};
}

TriWindow<Rational> window_from_json(const nlohmann::json& j);

// Aligned table with the strict lower triangle left blank.
template <CoeffRing T>
std::string window_to_text(const TriWindow<T>& m)
{
    const int n = m.size();
    std::vector<std::string> cells(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    std::vector<std::size_t> width(static_cast<std::size_t>(n), 1);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            auto& c = cells[static_cast<std::size_t>(i * n + j)];
            c = RingTraits<T>::to_string(m(i, j));
            width[static_cast<std::size_t>(j)] = std::max(width[static_cast<std::size_t>(j)], c.size());
        }
    }
    std::ostringstream out;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const auto& c = cells[static_cast<std::size_t>(i * n + j)];
            if (j > 0) {
                out << "  ";
            }
            out << std::string(width[static_cast<std::size_t>(j)] - c.size(), ' ') << c;
        }
        out << '\n';
    }
    return out.str();
}

template <CoeffRing T>
nlohmann::json series_to_json(const Series<T>& f)
{
    nlohmann::json coeffs = nlohmann::json::array();
    for (int k = 0; k <= f.order(); ++k) {
        coeffs.push_back(RingTraits<T>::to_string(f.coeff(k)));
    }
    return {{"order", f.order()}, {"coeffs", coeffs}};
}

}  // namespace iterlog
