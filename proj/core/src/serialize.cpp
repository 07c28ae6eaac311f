#include "orbitmult/serialize.hpp"

#include <sstream>

#include <json.hpp>

namespace orbitmult {

using nlohmann::json;

DominantWeight parse_weight(const std::string& text) {
    std::vector<long long> entries;
    std::size_t pos = 0;
    if (text.empty())
        throw ParseError("empty weight");
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string token = text.substr(pos, comma - pos);
        try {
            std::size_t used = 0;
            entries.push_back(std::stoll(token, &used));
            if (used != token.size())
                throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw ParseError("malformed weight entry '" + token + "' in '" + text + "'");
        }
        pos = comma + 1;
        if (comma == text.size())
            break;
    }
    return DominantWeight(std::move(entries));
}

std::string format_weight(const DominantWeight& w) {
    std::ostringstream out;
    for (std::size_t i = 0; i < w.size(); ++i) out << (i ? "," : "") << w[i];
    return out.str();
}

namespace {

json weight_to_json(const DominantWeight& w) {
    json arr = json::array();
    for (std::size_t i = 0; i < w.size(); ++i) arr.push_back(w[i]);
    return arr;
}

json pairs_of(const ComplexVector& v) {
    json arr = json::array();
    for (const Complex& c : v) arr.push_back(json::array({c.real(), c.imag()}));
    return arr;
}

std::string csv_field(const std::string& s) {
    if (s.find(',') == std::string::npos && s.find('"') == std::string::npos)
        return s;
    std::string quoted = "\"";
    for (char ch : s) {
        if (ch == '"')
            quoted += '"';
        quoted += ch;
    }
    quoted += '"';
    return quoted;
}

} // namespace

std::string to_json(const CGResult& result) {
    json j;
    j["n"] = result.multiplicity.is_infinite() ? json("inf")
                                               : json(result.multiplicity.value());
    j["path"] = to_string(result.path);
    if (result.group_norms) {
        json c = json::array();
        for (const Rational& q : *result.group_norms) c.push_back(format_rational(q));
        j["c"] = c;
    }
    if (result.witness) {
        json w = json::array();
        for (const WitnessEntry& e : *result.witness)
            w.push_back(json{{"radicand", format_rational(e.radicand)}, {"index", e.index}});
        j["witness"] = w;
    }
    j["diagnostics"] = result.diagnostics;
    return j.dump();
}

std::string to_json(const LinearForm& phi) {
    json j;
    json s = json::array(); // row-major list of [re, im]
    for (std::size_t i = 0; i < phi.S.n(); ++i)
        for (std::size_t col = 0; col < phi.S.n(); ++col)
            s.push_back(json::array({phi.S(i, col).real(), phi.S(i, col).imag()}));
    j["S"] = s;
    j["u"] = pairs_of(phi.u);
    j["x"] = phi.x;
    return j.dump();
}

LinearForm linear_form_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.contains("S") || !j.contains("u") || !j.contains("x"))
        throw ParseError("linear form JSON needs S, u, x");
    const auto& u = j["u"];
    const std::size_t n = u.size();
    if (j["S"].size() != n * n)
        throw ParseError("S must hold n*n [re,im] pairs");
    LinearForm phi;
    phi.S = CMatrix(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t col = 0; col < n; ++col) {
            const auto& entry = j["S"][i * n + col];
            phi.S(i, col) = Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
        }
    phi.u.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        phi.u[i] = Complex(u[i].at(0).get<double>(), u[i].at(1).get<double>());
    phi.x = j["x"].get<double>();
    return phi;
}

const char* to_string(Convention c) {
    return c == Convention::PaperFock ? "PaperFock" : "ConjugateFock";
}

const char* to_string(AlphaSign s) { return s == AlphaSign::Positive ? "+" : "-"; }

std::string to_json(const BranchingTable& table) {
    json j;
    j["lambda"] = weight_to_json(table.lambda);
    j["alpha_sign"] = to_string(table.alpha_sign);
    j["convention"] = to_string(table.convention);
    json rows = json::array();
    for (const BranchingRow& row : table.rows) {
        json constituents = json::array();
        for (const DominantWeight& nu : row.constituents) constituents.push_back(weight_to_json(nu));
        rows.push_back(json{{"k", row.k}, {"constituents", constituents}});
    }
    j["rows"] = rows;
    return j.dump();
}

std::string to_csv(const BranchingTable& table) {
    std::ostringstream out;
    out << "k,nu,dim\n";
    for (const BranchingRow& row : table.rows)
        for (const DominantWeight& nu : row.constituents)
            out << row.k << ',' << csv_field(format_weight(nu)) << ','
                << weyl_dimension(nu).str() << '\n';
    return out.str();
}

std::string to_csv(std::span<const CompareRow> rows, const std::vector<bool>& flags) {
    std::ostringstream out;
    const bool with_flags = !flags.empty();
    out << "mu,n,m,agree" << (with_flags ? ",paper_form_flag" : "") << '\n';
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const CompareRow& row = rows[i];
        out << csv_field(format_weight(row.mu)) << ','
            << (row.n.is_infinite() ? std::string("inf") : std::to_string(row.n.value())) << ','
            << row.m << ',' << (row.agree_nonvanishing ? "true" : "false");
        if (with_flags)
            out << ',' << (flags[i] ? "true" : "false");
        out << '\n';
    }
    return out.str();
}

} // namespace orbitmult
