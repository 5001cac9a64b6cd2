#pragma once

#include <json.hpp>

#include <string>
#include <variant>

#include "fp.hpp"
#include "hyperdet.hpp"
#include "oracles.hpp"
#include "rational.hpp"
#include "reduction.hpp"

namespace hyperdet {

using json = nlohmann::json;

inline Fp parse_fp(const std::string& s, std::uint64_t p) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw ParseError("bad residue '" + s + "'");
        return Fp(v, p);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad residue '" + s + "'");
    } catch (const std::out_of_range&) {
        throw ParseError("residue out of range '" + s + "'");
    }
}

// Hypermatrix JSON:
// {"field":"fp"|"rational", "p":<prime, fp only>, "k":<int>,
//  "slices":[[[row of k entries], ... k+1 rows], [...]]}
// with entries encoded as strings.
using AnyHypermatrix = std::variant<Hypermatrix<Fp>, Hypermatrix<Rat>>;

inline AnyHypermatrix parse_hypermatrix(const json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("k") || !j.contains("slices"))
        throw ParseError("hypermatrix JSON needs field, k, slices");
    std::string field = j.at("field").get<std::string>();
    int k = j.at("k").get<int>();
    if (k < 1) throw DimensionMismatch("k must be >= 1");
    const json& slices = j.at("slices");
    if (!slices.is_array() || slices.size() != 2)
        throw DimensionMismatch("expected exactly 2 slices");
    auto fill = [&](auto& m, auto decode) {
        for (int s = 0; s < 2; ++s) {
            const json& slice = slices.at(s);
            if (!slice.is_array() || static_cast<int>(slice.size()) != k + 1)
                throw DimensionMismatch("slice must have k+1 rows");
            for (int r = 0; r <= k; ++r) {
                const json& row = slice.at(r);
                if (!row.is_array() || static_cast<int>(row.size()) != k)
                    throw DimensionMismatch("row must have k entries");
                for (int c = 0; c < k; ++c)
                    m.at(s, r, c) = decode(row.at(c).get<std::string>());
            }
        }
    };
    if (field == "fp") {
        if (!j.contains("p")) throw ParseError("fp hypermatrix needs p");
        std::uint64_t p = j.at("p").get<std::uint64_t>();
        if (p < 2) throw ParseError("modulus must be >= 2");
        Hypermatrix<Fp> m(k, Fp(0, p));
        fill(m, [p](const std::string& s) { return parse_fp(s, p); });
        return m;
    }
    if (field == "rational") {
        Hypermatrix<Rat> m(k, Rat(0));
        fill(m, [](const std::string& s) { return Rat::parse(s); });
        return m;
    }
    throw ParseError("unknown field '" + field + "'");
}

template <class F>
json hypermatrix_to_json(const Hypermatrix<F>& m);

template <>
inline json hypermatrix_to_json(const Hypermatrix<Fp>& m) {
    json slices = json::array();
    for (int s = 0; s < 2; ++s) {
        json slice = json::array();
        for (int r = 0; r <= m.k(); ++r) {
            json row = json::array();
            for (int c = 0; c < m.k(); ++c) row.push_back(m.at(s, r, c).str());
            slice.push_back(row);
        }
        slices.push_back(slice);
    }
    return {{"field", "fp"}, {"p", m.at(0, 0, 0).modulus()}, {"k", m.k()}, {"slices", slices}};
}

template <>
inline json hypermatrix_to_json(const Hypermatrix<Rat>& m) {
    json slices = json::array();
    for (int s = 0; s < 2; ++s) {
        json slice = json::array();
        for (int r = 0; r <= m.k(); ++r) {
            json row = json::array();
            for (int c = 0; c < m.k(); ++c) row.push_back(m.at(s, r, c).str());
            slice.push_back(row);
        }
        slices.push_back(slice);
    }
    return {{"field", "rational"}, {"k", m.k()}, {"slices", slices}};
}

// Operation log: JSON array of
// {"side":"row"|"column", "kind":"swap"|"scale"|"addmul", "i":., "j":., "scalar":"..."}
template <class F>
json log_to_json(const std::vector<OperationRecord<F>>& log) {
    json arr = json::array();
    for (const auto& op : log) {
        json rec = {{"side", op.side == Side::Row ? "row" : "column"},
                    {"kind", op.kind == OpKind::Swap     ? "swap"
                             : op.kind == OpKind::Scale  ? "scale"
                                                         : "addmul"},
                    {"i", op.i},
                    {"j", op.j}};
        if (op.scalar) rec["scalar"] = op.scalar->str();
        arr.push_back(rec);
    }
    return arr;
}

template <class F, class Decode>
std::vector<OperationRecord<F>> log_from_json(const json& arr, Decode decode) {
    std::vector<OperationRecord<F>> log;
    for (const json& rec : arr) {
        OperationRecord<F> op;
        std::string side = rec.at("side").get<std::string>();
        std::string kind = rec.at("kind").get<std::string>();
        op.side = side == "row" ? Side::Row : Side::Column;
        op.kind = kind == "swap" ? OpKind::Swap : kind == "scale" ? OpKind::Scale : OpKind::AddMul;
        op.i = rec.at("i").get<int>();
        op.j = rec.at("j").get<int>();
        if (rec.contains("scalar")) op.scalar = decode(rec.at("scalar").get<std::string>());
        log.push_back(op);
    }
    return log;
}

// SparsePolynomial: JSON array of {"coeff": string, "exps": [int,...]} in
// canonical (descending graded-lex) order.
inline json poly_to_json(const Poly<Rat>& p) {
    json arr = json::array();
    for (const auto& [m, c] : p.terms()) {
        json exps = json::array();
        for (auto e : m) exps.push_back(e);
        arr.push_back({{"coeff", c.str()}, {"exps", exps}});
    }
    return arr;
}

inline Poly<Rat> poly_from_json(const json& arr, int nvars) {
    Poly<Rat> p(nvars);
    for (const json& term : arr) {
        Mono m;
        for (const json& e : term.at("exps")) m.push_back(e.get<std::uint16_t>());
        if (static_cast<int>(m.size()) != nvars) throw VariableCountMismatch();
        p.add_term(m, Rat::parse(term.at("coeff").get<std::string>()));
    }
    return p;
}

inline json count_report_to_json(const CountReport& rep) {
    json j = {{"k", rep.k}, {"q", rep.q}, {"formula", rep.formula.get_str()}};
    if (rep.enumerated) {
        j["enumerated"] = rep.enumerated->get_str();
        j["agree"] = rep.agree;
    }
    return j;
}

template <class F>
json group_element_to_json(const GroupElement<F>& g) {
    auto mat = [](const Matrix<F>& m) {
        json rows = json::array();
        for (int r = 0; r < m.rows(); ++r) {
            json row = json::array();
            for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
            rows.push_back(row);
        }
        return rows;
    };
    return {{"A", mat(g.A())}, {"B", mat(g.B())}};
}

}  // namespace hyperdet
