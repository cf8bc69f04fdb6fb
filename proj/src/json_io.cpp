#include "qsymp/json_io.hpp"

#include <sstream>

namespace qsymp {

namespace {

json poly_to_json(const LaurentPoly& p) {
    json arr = json::array();
    for (const auto& [e, v] : p.coeffs()) {
        std::ostringstream os;
        os << v;
        arr.push_back(json::array({e, os.str()}));
    }
    return arr;
}

LaurentPoly poly_from_json(const json& j) {
    LaurentPoly p;
    for (const auto& item : j) {
        int e = item.at(0).get<int>();
        Rational v(item.at(1).get<std::string>());
        p.set_coeff(e, v);
    }
    return p;
}

} // namespace

json to_json(const QScalar& v) {
    return json{{"num", poly_to_json(v.num())}, {"den", poly_to_json(v.den())}};
}

QScalar qscalar_from_json(const json& j) {
    return QScalar(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

json to_json(const OpMatrix& m) {
    json entries = json::array();
    for (const auto& [i, row] : m.entries())
        for (const auto& [j, v] : row) entries.push_back(json::array({i + 1, j + 1, to_json(v)}));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

OpMatrix matrix_from_json(const json& j) {
    OpMatrix m(j.at("rows").get<int>(), j.at("cols").get<int>());
    for (const auto& item : j.at("entries"))
        m.set(item.at(0).get<int>() - 1, item.at(1).get<int>() - 1, qscalar_from_json(item.at(2)));
    return m;
}

json to_json(const SPModule& mod) {
    json weights = json::array();
    for (const auto& [a, mult] : mod.weights) weights.push_back(json::array({a, mult}));
    json mats = json::object();
    for (const auto& [ij, m] : mod.s) {
        std::ostringstream key;
        key << "s[" << ij.first << "," << ij.second << "]";
        mats[key.str()] = to_json(m);
    }
    for (const auto& [i, m] : mod.sinv) {
        std::ostringstream key;
        key << "sinv[" << i << "]";
        mats[key.str()] = to_json(m);
    }
    json hi = json::array();
    for (const auto& v : mod.highest) hi.push_back(to_json(v));
    return json{{"n", mod.n},         {"dim", mod.dim},     {"m", mod.m},
                {"signs", mod.signs}, {"weights", weights}, {"highest", hi},
                {"matrices", mats}};
}

SPModule module_from_json(const json& j) {
    SPModule mod;
    mod.n = j.at("n").get<int>();
    mod.dim = j.at("dim").get<int>();
    if (j.contains("m")) mod.m = j.at("m").get<std::vector<int>>();
    if (j.contains("signs")) mod.signs = j.at("signs").get<std::vector<int>>();
    if (j.contains("weights"))
        for (const auto& item : j.at("weights"))
            mod.weights[item.at(0).get<std::vector<int>>()] = item.at(1).get<int>();
    if (j.contains("highest"))
        for (const auto& item : j.at("highest")) mod.highest.push_back(qscalar_from_json(item));
    for (const auto& [key, val] : j.at("matrices").items()) {
        int i = 0, jj = 0;
        if (std::sscanf(key.c_str(), "s[%d,%d]", &i, &jj) == 2)
            mod.s.emplace(std::make_pair(i, jj), matrix_from_json(val));
        else if (std::sscanf(key.c_str(), "sinv[%d]", &i) == 1)
            mod.sinv.emplace(i, matrix_from_json(val));
        else
            throw parse_error("module JSON: unrecognized matrix key " + key);
    }
    return mod;
}

json gl_manifest(const GLModule& mod) {
    json patterns = json::array();
    for (const auto& p : mod.patterns()) patterns.push_back(p.rows());
    json mats = json::object();
    int N = mod.N();
    for (int k = 1; k <= N; ++k) mats["t" + std::to_string(k)] = to_json(mod.t(k));
    for (int k = 1; k + 1 <= N; ++k) {
        mats["e" + std::to_string(k)] = to_json(mod.e(k));
        mats["f" + std::to_string(k)] = to_json(mod.f(k));
    }
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            std::ostringstream tk, tbk;
            if (i >= j) {
                tk << "t[" << i << "," << j << "]";
                mats[tk.str()] = to_json(mod.t_rtf(i, j));
            }
            if (i <= j) {
                tbk << "tb[" << i << "," << j << "]";
                mats[tbk.str()] = to_json(mod.tb_rtf(i, j));
            }
        }
    return json{{"nu", mod.weight().nu},
                {"dim", mod.dim()},
                {"patterns", patterns},
                {"matrices", mats}};
}

} // namespace qsymp
