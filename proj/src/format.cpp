#include "iterlog/format.hpp"

namespace iterlog {

TriWindow<Rational> window_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("dim") || !j.contains("entries")) {
        throw ParseError("window JSON needs 'dim' and 'entries'");
    }
    const int dim = j.at("dim").get<int>();
    const auto& entries = j.at("entries");
    if (dim < 0 || !entries.is_array() || entries.size() != static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim)) {
        throw ParseError("window JSON 'entries' must hold dim*dim values");
    }
    TriWindow<Rational> m(dim);
    for (int i = 0; i < dim; ++i) {
        for (int k = 0; k < dim; ++k) {
            const auto& e = entries[static_cast<std::size_t>(i * dim + k)];
            if (!e.is_string()) {
                throw ParseError("window JSON entries must be strings");
            }
            m.set(i, k, parse_rational(e.get<std::string>()));
        }
    }
    return m;
}

}  // namespace iterlog
