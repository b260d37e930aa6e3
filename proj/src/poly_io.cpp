#include "salmon/poly_io.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

namespace salmon {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string monomial_line(const SparsePolynomial::Term& term) {
    std::string line = term.coeff.get_str();
    for (const auto& [v, e] : term.mono.entries()) {
        line += " " + v.str();
        if (e != 1) line += "^" + std::to_string(e);
    }
    return line;
}

}  // namespace

std::string emit_polynomial_terms(const SparsePolynomial& p) {
    std::string out;
    for (const auto& term : p.terms()) out += monomial_line(term) + "\n";
    return out;
}

std::string emit_module_basis(const ModuleBasis& basis) {
    std::ostringstream os;
    os << "# module=" << basis.name << " dims=" << basis.dims.str() << " degree=" << basis.degree << "\n";
    if (!basis.note.empty()) os << "# note: " << basis.note << "\n";
    for (std::size_t id = 0; id < basis.polys.size(); ++id) {
        os << "poly " << id << " " << basis.provenance[id] << "\n";
        os << emit_polynomial_terms(basis.polys[id]);
        os << "\n";
    }
    return os.str();
}

namespace {

VariableIndex parse_variable(const std::string& tok, std::size_t& at) {
    // x[i,j,k]
    auto expect = [&](char c) {
        if (at >= tok.size() || tok[at] != c) throw input_error("bad monomial token: '" + tok + "'");
        ++at;
    };
    auto number = [&] {
        std::size_t start = at;
        while (at < tok.size() && tok[at] >= '0' && tok[at] <= '9') ++at;
        if (start == at) throw input_error("bad monomial token: '" + tok + "'");
        return std::stoi(tok.substr(start, at - start));
    };
    expect('x');
    expect('[');
    int i = number();
    expect(',');
    int j = number();
    expect(',');
    int k = number();
    expect(']');
    return VariableIndex(i, j, k);
}

SparsePolynomial::Term parse_monomial_line(const std::string& line) {
    std::istringstream is(line);
    std::string coeff_tok;
    is >> coeff_tok;
    SparsePolynomial::Term term;
    term.coeff = int_from_string(coeff_tok);
    std::vector<VariableIndex> vars;
    std::string tok;
    while (is >> tok) {
        std::size_t at = 0;
        VariableIndex v = parse_variable(tok, at);
        int e = 1;
        if (at < tok.size()) {
            if (tok[at] != '^') throw input_error("bad monomial token: '" + tok + "'");
            e = std::stoi(tok.substr(at + 1));
            if (e < 1) throw input_error("exponents must be positive: '" + tok + "'");
        }
        for (int r = 0; r < e; ++r) vars.push_back(v);
    }
    term.mono = Monomial::from_variables(std::move(vars));
    return term;
}

}  // namespace

ModuleBasis parse_module_basis(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    ModuleBasis basis;
    bool have_header = false;
    std::vector<SparsePolynomial::Term> terms;
    bool in_poly = false;

    auto flush_poly = [&] {
        if (!in_poly) return;
        basis.polys.push_back(SparsePolynomial::from_terms(basis.dims, std::move(terms)));
        terms.clear();
        in_poly = false;
    };

    while (std::getline(is, line)) {
        if (line.empty()) {
            flush_poly();
            continue;
        }
        if (line.rfind("# note: ", 0) == 0) {
            basis.note = line.substr(8);
            continue;
        }
        if (line[0] == '#') {
            std::istringstream hs(line.substr(1));
            std::string tok;
            while (hs >> tok) {
                auto eq = tok.find('=');
                if (eq == std::string::npos) continue;
                const std::string key = tok.substr(0, eq), value = tok.substr(eq + 1);
                if (key == "module") basis.name = value;
                if (key == "degree") basis.degree = std::stoi(value);
                if (key == "dims") {
                    std::istringstream ds(value);
                    char comma;
                    if (!(ds >> basis.dims.a >> comma >> basis.dims.b >> comma >> basis.dims.c))
                        throw input_error("bad dims in header: '" + line + "'");
                }
            }
            have_header = true;
            continue;
        }
        if (!have_header) throw input_error("polynomial file must start with a '# module=...' header");
        if (line.rfind("poly ", 0) == 0) {
            flush_poly();
            std::istringstream ps(line);
            std::string kw, id, prov;
            ps >> kw >> id;
            std::getline(ps, prov);
            if (!prov.empty() && prov.front() == ' ') prov.erase(prov.begin());
            if (static_cast<std::size_t>(std::stoul(id)) != basis.polys.size())
                throw input_error("polynomial ids must be consecutive from 0: got '" + line + "'");
            basis.provenance.push_back(prov);
            in_poly = true;
            continue;
        }
        if (!in_poly) throw input_error("monomial line outside a poly block: '" + line + "'");
        terms.push_back(parse_monomial_line(line));
    }
    flush_poly();
    if (basis.polys.size() != basis.provenance.size())
        throw contract_error("parsed polynomial/provenance count mismatch");
    return basis;
}

std::string tensor_to_json(const Tensor3& t, const std::string& meta_kind, std::uint64_t seed, int r) {
    ordered_json j;
    j["dims"] = {t.dims().a, t.dims().b, t.dims().c};
    std::vector<std::string> entries;
    entries.reserve(t.dims().size());
    if (t.exact()) {
        for (const auto& q : t.exact_entries()) entries.push_back(rat_to_string(q));
    } else {
        for (double x : t.numeric_entries()) entries.push_back(std::to_string(x));
    }
    j["entries"] = entries;
    if (!meta_kind.empty()) {
        ordered_json meta;
        meta["kind"] = meta_kind;
        meta["seed"] = seed;
        if (r > 0) meta["r"] = r;
        j["meta"] = meta;
    }
    return j.dump(2) + "\n";
}

Tensor3 tensor_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(std::string("malformed tensor JSON: ") + e.what());
    }
    if (!j.contains("dims") || !j["dims"].is_array() || j["dims"].size() != 3)
        throw input_error("tensor JSON needs \"dims\":[a,b,c]");
    Dims dims{j["dims"][0].get<int>(), j["dims"][1].get<int>(), j["dims"][2].get<int>()};
    if (dims.a < 1 || dims.b < 1 || dims.c < 1) throw input_error("tensor dims must be positive");
    if (!j.contains("entries")) throw input_error("tensor JSON needs \"entries\"");

    std::vector<Rat> flat;
    std::function<void(const nlohmann::json&)> collect = [&](const nlohmann::json& node) {
        if (node.is_array()) {
            for (const auto& sub : node) collect(sub);
        } else if (node.is_string()) {
            flat.push_back(rat_from_string(node.get<std::string>()));
        } else if (node.is_number_integer()) {
            flat.push_back(Rat(Int(static_cast<long>(node.get<long long>()))));
        } else {
            throw input_error("tensor entries must be rational strings or integers");
        }
    };
    collect(j["entries"]);
    if (static_cast<long>(flat.size()) != dims.size())
        throw input_error("tensor entry count " + std::to_string(flat.size()) + " does not match dims " +
                          dims.str());
    Tensor3 t(dims);
    std::size_t at = 0;
    for (int i = 1; i <= dims.a; ++i)
        for (int jx = 1; jx <= dims.b; ++jx)
            for (int k = 1; k <= dims.c; ++k) t.at(i, jx, k) = flat[at++];
    return t;
}

namespace {

ordered_json maps_to_json(const CompressionMaps& maps) {
    ordered_json j;
    for (Factor f : {Factor::A, Factor::B, Factor::C}) {
        const RationalMatrix& m = maps.factor(f);
        std::vector<std::vector<std::string>> rows(m.rows());
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c) rows[r].push_back(rat_to_string(m.at(r, c)));
        j[std::string("phi") + factor_name(f)] = rows;
    }
    return j;
}

ordered_json verdict_to_json(const FamilyVerdict& v) {
    ordered_json j;
    switch (v.status) {
        case FamilyVerdict::Status::Vanishes: j["verdict"] = "vanishes"; break;
        case FamilyVerdict::Status::DoesNotVanish: j["verdict"] = "does-not-vanish"; break;
        case FamilyVerdict::Status::Skipped: j["verdict"] = "skipped"; break;
    }
    j["certain"] = v.certain;
    j["trials"] = v.trials;
    if (!v.note.empty()) j["note"] = v.note;
    if (v.witness) {
        ordered_json w;
        w["trial"] = v.witness->trial;
        w["poly"] = v.witness->poly_id;
        w["value"] = v.witness->value;
        w["compression"] = maps_to_json(v.witness->maps);
        j["witness"] = w;
    }
    return j;
}

}  // namespace

std::string report_to_json(const MembershipReport& report) {
    ordered_json j;
    j["dims"] = {report.dims.a, report.dims.b, report.dims.c};
    j["mode"] = report.mode;
    j["flattening_ranks"] = report.flattening_ranks;
    j["sub444_pass"] = report.sub444_pass;
    ordered_json families;
    families["M5"] = verdict_to_json(report.m5);
    families["M6"] = verdict_to_json(report.m6);
    families["M9"] = verdict_to_json(report.m9);
    j["families"] = families;
    j["conclusion"] = report.conclusion();
    j["seed"] = report.seed;
    j["trials"] = report.trials;
    j["provenance_note"] =
        "vanishing verdicts are probabilistic (random compressions); non-vanishing is certain in exact mode";
    return j.dump(2) + "\n";
}

std::string scan_to_json(const ScanResult& scan) {
    ordered_json j;
    j["degree"] = scan.degree;
    j["dims"] = {scan.dims.a, scan.dims.b, scan.dims.c};
    j["samples"] = scan.sample_count;
    j["secant_rank"] = scan.secant_rank;
    j["seed"] = scan.seed;
    j["vanishing_components"] = scan.vanishing_count();
    ordered_json comps = ordered_json::array();
    for (const auto& c : scan.components) {
        ordered_json jc;
        jc["triple"] = {c.triple[0].str(), c.triple[1].str(), c.triple[2].str()};
        jc["multiplicity"] = c.multiplicity.get_str();
        jc["component_dim"] = c.component_dim.get_str();
        jc["kernel_dim"] = c.kernel_dim;
        jc["verdict"] = c.vanishing ? "vanishing" : "non-vanishing";
        comps.push_back(jc);
    }
    j["components"] = comps;
    return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write file: " + path);
    out << content;
}

}  // namespace salmon
