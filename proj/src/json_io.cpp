#include "hankelforge/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace hankelforge {

Json to_json(const Rational& r) {
    return Json{{"num", r.num().get_str()}, {"den", r.den().get_str()}};
}

Rational rational_from_json(const Json& j) {
    return Rational(mpz_class(j.at("num").get<std::string>()),
                    mpz_class(j.at("den").get<std::string>()));
}

Json to_json(const LaurentPoly& p) {
    Json entries = Json::array();
    for (const auto& [e, c] : p.terms())
        entries.push_back(Json{{"exp", e}, {"value", to_json(c)}});
    return entries;
}

Json to_json(const Section& u) {
    return Json{{"weight", Json{{"twice", u.weight.twice}}}, {"entries", to_json(u.coeff)}};
}

Json to_json(const SymTensor& t) {
    Json entries = Json::array();
    for (const auto& [key, c] : t.terms())
        entries.push_back(Json{{"key", key}, {"value", to_json(c)}});
    return entries;
}

Json to_json(const TensorElt& t) {
    Json entries = Json::array();
    for (const auto& [key, c] : t.terms())
        entries.push_back(Json{{"i", key.first}, {"j", key.second}, {"value", to_json(c)}});
    return entries;
}

Json to_json(const OperatorWindow& w, bool paper_orientation) {
    const auto rows = paper_orientation ? rows_bottom_up(w) : w.entries;
    Json matrix = Json::array();
    for (const auto& row : rows) {
        Json jrow = Json::array();
        for (const auto& cell : row) jrow.push_back(to_json(cell));
        matrix.push_back(std::move(jrow));
    }
    return Json{{"s", w.s},
                {"kind", "matrix"},
                {"rows", w.rows},
                {"cols", w.cols},
                {"paper_orientation", paper_orientation},
                {"entries", std::move(matrix)}};
}

Json to_json(const BilinearReport& r) {
    Json samples = Json::array();
    for (const auto& sample : r.samples)
        samples.push_back(Json{{"k", sample.k},
                               {"i", sample.i},
                               {"j", sample.j},
                               {"K", to_json(sample.K)},
                               {"Ktilde", to_json(sample.Ktilde)}});
    Json out{{"s", r.s}, {"kind", "adjoint_report"}};
    out["lambda"] = r.lambda ? to_json(*r.lambda) : Json("undefined");
    if (r.offending)
        out["offending"] = Json{{"k", r.offending->k},
                                {"i", r.offending->i},
                                {"j", r.offending->j},
                                {"K", to_json(r.offending->K)},
                                {"Ktilde", to_json(r.offending->Ktilde)}};
    out["samples"] = std::move(samples);
    return out;
}

Json to_json(const IdentityResult& r) {
    return Json{{"family", r.family == IdentityFamily::A ? "A" : "B"},
                {"params", r.params},
                {"lhs", to_json(r.lhs)},
                {"rhs", to_json(r.rhs)},
                {"equal", r.equal}};
}

std::string window_to_csv(const OperatorWindow& w, bool paper_orientation) {
    const auto rows = paper_orientation ? rows_bottom_up(w) : w.entries;
    std::ostringstream os;
    for (const auto& row : rows) {
        for (std::size_t n = 0; n < row.size(); ++n) {
            if (n) os << ',';
            os << row[n].str();
        }
        os << '\n';
    }
    return os.str();
}

OperatorWindow window_from_csv(int s, const std::string& csv) {
    OperatorWindow w;
    w.s = s;
    std::istringstream is(csv);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<Rational> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) row.push_back(Rational::from_string(cell));
        if (!w.entries.empty() && row.size() != w.entries.front().size())
            throw std::invalid_argument("window_from_csv: ragged rows");
        w.entries.push_back(std::move(row));
    }
    w.rows = static_cast<int>(w.entries.size());
    w.cols = w.entries.empty() ? 0 : static_cast<int>(w.entries.front().size());
    return w;
}

}  // namespace hankelforge
