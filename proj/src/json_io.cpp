#include "scrollsmith/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "scrollsmith/errors.hpp"

namespace scrollsmith {

Json json_parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("json parse failure: ") + e.what());
    }
}

Json matrix_to_json(const ExactMatrix& m) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    if (m.modulus())
        j["modulus"] = m.modulus();
    else
        j["modulus"] = nullptr;
    Json rows = Json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(i, c).str());
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

ExactMatrix matrix_from_json(const Json& j) {
    size_t rows = j.at("rows").get<size_t>();
    size_t cols = j.at("cols").get<size_t>();
    uint64_t mod = j.at("modulus").is_null() ? 0 : j.at("modulus").get<uint64_t>();
    const Json& entries = j.at("entries");
    if (entries.size() != rows) throw Error("matrix json: row count mismatch");
    ExactMatrix m(rows, cols, mod);
    for (size_t i = 0; i < rows; ++i) {
        const Json& row = entries.at(i);
        if (row.size() != cols) throw Error("matrix json: column count mismatch");
        for (size_t c = 0; c < cols; ++c)
            m.at(i, c) = Scalar::parse(row.at(c).get<std::string>(), mod);
    }
    return m;
}

Json poly_to_json(const MultiPoly& f) {
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms()) {
        Json t;
        t["coeff"] = c.str();
        t["exps"] = e;
        terms.push_back(std::move(t));
    }
    return terms;
}

MultiPoly poly_from_json(const Json& j, size_t nvars, uint64_t modulus) {
    MultiPoly f(nvars, modulus);
    for (const Json& t : j) {
        Exp e = t.at("exps").get<Exp>();
        if (e.size() != nvars) throw Error("poly json: exponent arity mismatch");
        f.add_term(e, Scalar::parse(t.at("coeff").get<std::string>(), modulus));
    }
    return f;
}

Json ideal_to_json(const std::vector<MultiPoly>& gens, const std::vector<std::string>& vars) {
    Json j;
    Json ring;
    ring["vars"] = vars;
    if (!gens.empty() && gens[0].modulus())
        ring["modulus"] = gens[0].modulus();
    else
        ring["modulus"] = nullptr;
    j["ring"] = std::move(ring);
    Json polys = Json::array();
    for (const auto& g : gens) polys.push_back(poly_to_json(g));
    j["polys"] = std::move(polys);
    return j;
}

std::vector<MultiPoly> ideal_from_json(const Json& j) {
    const Json& ring = j.at("ring");
    size_t nvars = ring.at("vars").size();
    uint64_t mod = ring.at("modulus").is_null() ? 0 : ring.at("modulus").get<uint64_t>();
    std::vector<MultiPoly> gens;
    for (const Json& p : j.at("polys")) gens.push_back(poly_from_json(p, nvars, mod));
    return gens;
}

void write_file_atomic(const std::string& path, const std::string& contents) {
    std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open " + tmp.string() + " for writing");
        out << contents;
        if (!out) throw Error("short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace scrollsmith
