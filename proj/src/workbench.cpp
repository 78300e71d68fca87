#include "lialg/workbench.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

namespace lialg {

// catalog ---------------------------------------------------------------------

namespace {

FieldDescriptor field_from_param(const std::string& v) {
    if (v == "rat") return FieldDescriptor::rationals();
    if (v.rfind("gf", 0) == 0) {
        try {
            return FieldDescriptor::gf(std::stoll(v.substr(2)));
        } catch (const std::exception&) {
            throw BadParameters("bad field parameter '" + v + "'");
        }
    }
    throw BadParameters("field parameter must be 'gf<p>' or 'rat', got '" + v + "'");
}

std::int64_t int_param(const std::map<std::string, std::string>& params, const std::string& key,
                       std::int64_t fallback) {
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    try {
        return std::stoll(it->second);
    } catch (const std::exception&) {
        throw BadParameters("parameter " + key + " must be an integer, got '" + it->second + "'");
    }
}

void check_keys(const std::map<std::string, std::string>& params,
                std::initializer_list<const char*> allowed) {
    for (const auto& [k, v] : params) {
        bool ok = false;
        for (const char* a : allowed)
            if (k == a) ok = true;
        if (!ok) throw BadParameters("unknown parameter '" + k + "'");
    }
}

LieAlgebra build_ecomp(std::int64_t p) {
    if (!is_prime(p)) throw BadParameters("ecomp needs a prime p");
    FieldDescriptor f = FieldDescriptor::gf(p);
    std::vector<std::string> labels;
    for (std::int64_t i = 0; i < p; ++i) labels.push_back("e" + std::to_string(i));
    labels.push_back("x");
    labels.push_back("y");
    Scalar one = Scalar::one(f);
    std::vector<BracketAssignment> as;
    for (std::int64_t i = 0; i + 1 < p; ++i)
        as.push_back({"e" + std::to_string(i), "x", {{one, "e" + std::to_string(i + 1)}}});
    as.push_back({"e" + std::to_string(p - 1), "x", {{one, "e0"}}});
    for (std::int64_t i = 1; i < p; ++i) // [e0, y] = 0*e0 is omitted
        as.push_back({"e" + std::to_string(i), "y",
                      {{Scalar::from_int(i, f), "e" + std::to_string(i)}}});
    as.push_back({"x", "y", {{one, "x"}}});
    return validate_algebra(f, static_cast<int>(p) + 2, labels, as);
}

LieAlgebra build_a3(FieldDescriptor f) {
    Scalar one = Scalar::one(f);
    return validate_algebra(f, 3, {"x", "y", "b"},
                            {{"x", "b", {{one, "x"}}},
                             {"y", "b", {{one, "y"}, {-one, "x"}}}});
}

LieAlgebra build_abelian(int n, FieldDescriptor f) {
    if (n < 0) throw BadParameters("abelian needs n >= 0");
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back("b" + std::to_string(i));
    return validate_algebra(f, n, labels, {});
}

LieAlgebra build_heisenberg(FieldDescriptor f) {
    Scalar one = Scalar::one(f);
    return validate_algebra(f, 3, {"x", "y", "z"}, {{"x", "y", {{one, "z"}}}});
}

LieAlgebra build_r2(FieldDescriptor f) {
    Scalar one = Scalar::one(f);
    return validate_algebra(f, 2, {"x", "b"}, {{"x", "b", {{one, "x"}}}});
}

LieAlgebra build_type1(std::int64_t p, const std::string& weights) {
    FieldDescriptor f = FieldDescriptor::gf(p);
    std::vector<std::int64_t> ws;
    std::stringstream ss(weights);
    std::string tok;
    while (std::getline(ss, tok, ','))
        try {
            ws.push_back(std::stoll(tok));
        } catch (const std::exception&) {
            throw BadParameters("weights must be a comma-separated integer list");
        }
    if (ws.empty()) throw BadParameters("typeI needs at least one weight");
    int n = static_cast<int>(ws.size());
    Matrix d(f, n, n);
    for (int i = 0; i < n; ++i) d.at(i, i) = Scalar::from_int(ws[static_cast<std::size_t>(i)], f);
    return semidirect_type1(n, {d});
}

LieAlgebra build_triangular(int n, std::int64_t p) {
    if (n < 1) throw BadParameters("triangular needs n >= 1");
    FieldDescriptor f = FieldDescriptor::gf(p);
    // basis: matrix units E_ij, 1 <= i <= j <= n, row-major
    std::vector<std::pair<int, int>> units;
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            units.push_back({i, j});
            labels.push_back("e" + std::to_string(i) + std::to_string(j));
        }
    int dim = static_cast<int>(units.size());
    auto unit_index = [&](int i, int j) -> int {
        for (int k = 0; k < dim; ++k)
            if (units[static_cast<std::size_t>(k)] == std::make_pair(i, j)) return k;
        return -1;
    };
    std::vector<BracketAssignment> as;
    for (int a = 0; a < dim; ++a)
        for (int b = a + 1; b < dim; ++b) {
            auto [i, j] = units[static_cast<std::size_t>(a)];
            auto [k, l] = units[static_cast<std::size_t>(b)];
            // [E_ij, E_kl] = d_jk E_il - d_li E_kj
            BracketAssignment assign{labels[static_cast<std::size_t>(a)],
                                     labels[static_cast<std::size_t>(b)], {}};
            if (j == k) assign.terms.push_back({Scalar::one(f), labels[static_cast<std::size_t>(unit_index(i, l))]});
            if (l == i) assign.terms.push_back({-Scalar::one(f), labels[static_cast<std::size_t>(unit_index(k, j))]});
            if (!assign.terms.empty()) as.push_back(std::move(assign));
        }
    return validate_algebra(f, dim, labels, as);
}

/// Basis of the derivation algebra of l, each returned as an n x n matrix.
std::vector<Matrix> derivation_basis(const LieAlgebra& l) {
    FieldDescriptor f = l.field();
    int n = l.dim();
    if (n == 0) return {};
    int pairs = n * (n - 1) / 2;
    Matrix sys(f, std::max(1, pairs * n), n * n);
    int row = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec bij = l.bracket_basis(i, j);
            for (int k = 0; k < n; ++k, ++row) {
                // coefficient of D[r][c] in (D[e_i,e_j] - [De_i,e_j] - [e_i,De_j])_k
                for (int c = 0; c < n; ++c)
                    sys.at(row, k * n + c) += bij[static_cast<std::size_t>(c)];
                for (int r = 0; r < n; ++r) {
                    sys.at(row, r * n + i) -= l.bracket_basis(r, j)[static_cast<std::size_t>(k)];
                    sys.at(row, r * n + j) -= l.bracket_basis(i, r)[static_cast<std::size_t>(k)];
                }
            }
        }
    Matrix ker = kernel_basis(sys);
    std::vector<Matrix> out;
    for (int b = 0; b < ker.rows(); ++b) {
        Matrix d(f, n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) d.at(r, c) = ker.at(b, r * n + c);
        out.push_back(std::move(d));
    }
    return out;
}

} // namespace

LieAlgebra random_solvable(std::uint64_t seed, int dim, std::int64_t p) {
    if (dim < 1) throw BadParameters("random_solvable needs dim >= 1");
    FieldDescriptor f = FieldDescriptor::gf(p);
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 1);
    LieAlgebra cur = validate_algebra(f, 1, {"g0"}, {});
    while (cur.dim() < dim) {
        int m = cur.dim();
        auto ders = derivation_basis(cur);
        Matrix d(f, m, m);
        for (int attempt = 0; attempt < 3; ++attempt) {
            Matrix cand(f, m, m);
            for (const auto& basis_d : ders) {
                Scalar c = Scalar::from_int(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p)), f);
                cand = cand + basis_d.scaled(c);
            }
            d = cand;
            if (!d.is_zero()) break;
        }
        // extend by the new element t with [t, a] = D(a)
        std::vector<std::string> labels = cur.labels();
        std::string t = "g" + std::to_string(m);
        labels.push_back(t);
        std::vector<BracketAssignment> as;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                Vec br = cur.bracket_basis(i, j);
                BracketAssignment a{labels[static_cast<std::size_t>(i)],
                                    labels[static_cast<std::size_t>(j)], {}};
                for (int k = 0; k < m; ++k)
                    if (!br[static_cast<std::size_t>(k)].is_zero())
                        a.terms.push_back({br[static_cast<std::size_t>(k)],
                                           labels[static_cast<std::size_t>(k)]});
                if (!a.terms.empty()) as.push_back(std::move(a));
            }
        for (int i = 0; i < m; ++i) {
            BracketAssignment a{labels[static_cast<std::size_t>(i)], t, {}};
            for (int k = 0; k < m; ++k)
                if (!d.at(k, i).is_zero())
                    a.terms.push_back({-d.at(k, i), labels[static_cast<std::size_t>(k)]});
            if (!a.terms.empty()) as.push_back(std::move(a));
        }
        cur = validate_algebra(f, m + 1, labels, as);
    }
    if (!derived_series(cur).reaches_zero())
        throw TheoremViolation("derivation extension produced a non-solvable algebra");
    return cur;
}

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = {
        {"ecomp", "p=2", "cyclic shift plus grading derivation over GF(p), dim p+2"},
        {"a3", "field=gf3", "dim 3: [x,b]=x, [y,b]=y-x"},
        {"abelian", "n=2, field=gf2", "abelian algebra of dimension n"},
        {"heisenberg", "field=gf2", "dim 3: [x,y]=z"},
        {"r2", "field=gf2", "dim 2: [x,b]=x"},
        {"typeI", "p=2, weights=1,1", "abelian space with one diagonal semisimple action"},
        {"triangular", "n=2, p=2", "upper triangular n x n matrices"},
        {"random_solvable", "seed=1, dim=4, p=2", "seeded iterated derivation extension"},
    };
    return entries;
}

LieAlgebra catalog(const std::string& name, const std::map<std::string, std::string>& params) {
    auto field_param = [&](const char* fallback) {
        auto it = params.find("field");
        return field_from_param(it == params.end() ? fallback : it->second);
    };
    if (name == "ecomp") {
        check_keys(params, {"p"});
        return build_ecomp(int_param(params, "p", 2));
    }
    if (name == "a3") {
        check_keys(params, {"field"});
        return build_a3(field_param("gf3"));
    }
    if (name == "abelian") {
        check_keys(params, {"n", "field"});
        return build_abelian(static_cast<int>(int_param(params, "n", 2)), field_param("gf2"));
    }
    if (name == "heisenberg") {
        check_keys(params, {"field"});
        return build_heisenberg(field_param("gf2"));
    }
    if (name == "r2") {
        check_keys(params, {"field"});
        return build_r2(field_param("gf2"));
    }
    if (name == "typeI") {
        check_keys(params, {"p", "weights"});
        auto it = params.find("weights");
        return build_type1(int_param(params, "p", 2), it == params.end() ? "1,1" : it->second);
    }
    if (name == "triangular") {
        check_keys(params, {"n", "p"});
        return build_triangular(static_cast<int>(int_param(params, "n", 2)),
                                int_param(params, "p", 2));
    }
    if (name == "random_solvable") {
        check_keys(params, {"seed", "dim", "p"});
        return random_solvable(static_cast<std::uint64_t>(int_param(params, "seed", 1)),
                               static_cast<int>(int_param(params, "dim", 4)),
                               int_param(params, "p", 2));
    }
    throw UnknownCatalogName("no catalog entry named '" + name + "'");
}

// .lie file format -------------------------------------------------------------

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::string cur;
    for (char ch : line) {
        if (ch == '#') break;
        if (std::isspace(static_cast<unsigned char>(ch))) {
            if (!cur.empty()) toks.push_back(std::move(cur)), cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) toks.push_back(std::move(cur));
    return toks;
}

[[noreturn]] void parse_fail(int line_no, const std::string& reason) {
    throw ParseError("line " + std::to_string(line_no) + ": " + reason);
}

} // namespace

LieAlgebra parse_lie_file(const std::string& text) {
    std::optional<FieldDescriptor> field;
    int dim = -1;
    std::vector<std::string> labels;
    std::vector<BracketAssignment> assignments;
    std::set<std::pair<std::string, std::string>> seen_pairs;
    bool brackets_started = false;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& head = toks[0];
        if (head == "field") {
            if (field) parse_fail(line_no, "duplicate field line");
            if (toks.size() == 2 && toks[1] == "rat") {
                field = FieldDescriptor::rationals();
            } else if (toks.size() == 3 && toks[1] == "gf") {
                std::int64_t p;
                try {
                    p = std::stoll(toks[2]);
                } catch (const std::exception&) {
                    parse_fail(line_no, "bad prime '" + toks[2] + "'");
                }
                try {
                    field = FieldDescriptor::gf(p);
                } catch (const Error& e) {
                    parse_fail(line_no, e.what());
                }
            } else {
                parse_fail(line_no, "expected 'field gf <p>' or 'field rat'");
            }
        } else if (head == "dim") {
            if (!field) parse_fail(line_no, "dim before field");
            if (dim >= 0) parse_fail(line_no, "duplicate dim line");
            if (toks.size() != 2) parse_fail(line_no, "expected 'dim <n>'");
            try {
                dim = std::stoi(toks[1]);
            } catch (const std::exception&) {
                parse_fail(line_no, "bad dimension '" + toks[1] + "'");
            }
            if (dim < 0) parse_fail(line_no, "dimension must be nonnegative");
        } else if (head == "basis") {
            if (dim < 0) parse_fail(line_no, "basis before dim");
            if (!labels.empty() || brackets_started)
                parse_fail(line_no, "basis line out of place");
            if (static_cast<int>(toks.size()) - 1 != dim)
                parse_fail(line_no, "basis line must name exactly " + std::to_string(dim) +
                                        " elements");
            labels.assign(toks.begin() + 1, toks.end());
        } else if (head == "bracket") {
            if (dim < 0) parse_fail(line_no, "bracket before dim");
            brackets_started = true;
            if (toks.size() < 5 || toks[3] != "=")
                parse_fail(line_no, "expected 'bracket <u> <v> = <terms>'");
            BracketAssignment a{toks[1], toks[2], {}};
            auto key = std::minmax(a.left, a.right);
            if (!seen_pairs.insert({key.first, key.second}).second)
                throw DuplicateBracket("line " + std::to_string(line_no) + ": bracket [" +
                                       a.left + "," + a.right + "] already assigned");
            bool expect_term = true;
            for (std::size_t t = 4; t < toks.size(); ++t) {
                if (!expect_term) {
                    if (toks[t] != "+") parse_fail(line_no, "expected '+' between terms");
                    expect_term = true;
                    continue;
                }
                const std::string& term = toks[t];
                auto star = term.find('*');
                Scalar coef = Scalar::one(*field);
                std::string name = term;
                if (star != std::string::npos) {
                    try {
                        coef = parse_scalar(term.substr(0, star), *field);
                    } catch (const ParseError& e) {
                        parse_fail(line_no, e.what());
                    }
                    name = term.substr(star + 1);
                }
                if (name.empty()) parse_fail(line_no, "term with empty basis name");
                a.terms.push_back({coef, name});
                expect_term = false;
            }
            if (expect_term) parse_fail(line_no, "dangling '+' or empty term list");
            assignments.push_back(std::move(a));
        } else {
            parse_fail(line_no, "unknown directive '" + head + "'");
        }
    }
    if (!field) throw ParseError("missing field line");
    if (dim < 0) throw ParseError("missing dim line");
    if (labels.empty())
        for (int i = 1; i <= dim; ++i) labels.push_back("b" + std::to_string(i));
    return validate_algebra(*field, dim, labels, assignments);
}

std::string serialize(const LieAlgebra& l) {
    std::ostringstream os;
    const FieldDescriptor& f = l.field();
    if (f.is_prime_field())
        os << "field gf " << f.p() << "\n";
    else
        os << "field rat\n";
    os << "dim " << l.dim() << "\n";
    os << "basis";
    for (const auto& lb : l.labels()) os << " " << lb;
    os << "\n";
    for (int i = 0; i < l.dim(); ++i)
        for (int j = i + 1; j < l.dim(); ++j) {
            Vec br = l.bracket_basis(i, j);
            if (vec_is_zero(br)) continue;
            os << "bracket " << l.labels()[static_cast<std::size_t>(i)] << " "
               << l.labels()[static_cast<std::size_t>(j)] << " =";
            bool first = true;
            for (int k = 0; k < l.dim(); ++k) {
                const Scalar& c = br[static_cast<std::size_t>(k)];
                if (c.is_zero()) continue;
                os << (first ? " " : " + ");
                if (!c.is_one()) os << render(c) << "*";
                os << l.labels()[static_cast<std::size_t>(k)];
                first = false;
            }
            os << "\n";
        }
    return os.str();
}

// reporting --------------------------------------------------------------------

namespace {

nlohmann::json subspace_json(const Subspace& s) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < s.dim(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < s.ambient_dim(); ++c) row.push_back(render(s.basis().at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

std::string report_json(const std::string& name, const LieAlgebra& l,
                        const std::map<std::string, std::vector<Subspace>>& subspaces,
                        const std::vector<Record>& records) {
    nlohmann::json j;
    j["algebra"] = {{"name", name},
                    {"field", l.field().str()},
                    {"dim", l.dim()},
                    {"labels", l.labels()}};
    StructureFlags fl = structure_flags(l);
    j["flags"] = {{"solvable", fl.solvable},
                  {"nilpotent", fl.nilpotent},
                  {"abelian", fl.abelian},
                  {"completely_solvable", fl.completely_solvable},
                  {"derived_length", fl.derived_length}};
    nlohmann::json subs = nlohmann::json::object();
    for (const auto& [key, list] : subspaces) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& s : list) arr.push_back(subspace_json(s));
        subs[key] = std::move(arr);
    }
    j["subspaces"] = std::move(subs);
    nlohmann::json recs = nlohmann::json::array();
    for (const auto& r : records)
        recs.push_back({{"id", r.id}, {"status", to_string(r.status)}, {"witness", r.witness}});
    j["records"] = std::move(recs);
    return j.dump(2) + "\n";
}

// CLI ---------------------------------------------------------------------------

namespace {

LieAlgebra load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_lie_file(buf.str());
}

EnumerationBudget budget_for(const LieAlgebra& l, std::int64_t max_count) {
    EnumerationBudget b;
    if (max_count > 0) b.max_count = max_count;
    // the user explicitly asked for this input, so admit its field and size
    if (l.field().is_prime_field()) b.max_field_size = std::max(b.max_field_size, l.field().p());
    b.max_dim = std::max(b.max_dim, l.dim());
    return b;
}

std::map<std::string, std::string> parse_params(const std::vector<std::string>& kvs) {
    std::map<std::string, std::string> out;
    for (const auto& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw BadParameters("--param expects K=V, got '" + kv + "'");
        out[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    return out;
}

} // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact workbench for solvable Lie algebras"};
    app.require_subcommand(1);
    bool json = false;
    std::uint64_t seed = 0;
    std::int64_t budget_n = 0;
    app.add_flag("--json", json, "emit a JSON report instead of text");
    app.add_option("--seed", seed, "seed for sampled checks");

    std::string file, route_name = "splits_over_ideals", theorems, cat_name;
    std::vector<std::string> param_kvs;

    auto* info = app.add_subcommand("info", "field, dimension and structure flags");
    info->add_option("file", file)->required();
    auto* frattini = app.add_subcommand("frattini", "Frattini subalgebra");
    frattini->add_option("file", file)->required();
    auto* prefrattini = app.add_subcommand("prefrattini", "prefrattini subalgebras");
    prefrattini->add_option("file", file)->required();
    auto* chief = app.add_subcommand("chief-series", "canonical chief series with factor classes");
    chief->add_option("file", file)->required();
    auto* complemented = app.add_subcommand("complemented", "complementedness verdict");
    complemented->add_option("file", file)->required();
    complemented->add_option("--route", route_name,
                             "splits_over_ideals | prefrattini | phi_free_hereditary | definitional");
    auto* residual = app.add_subcommand("residual", "prefrattini and elementary residuals");
    residual->add_option("file", file)->required();
    auto* decompose = app.add_subcommand("decompose", "abelian decomposition along the derived series");
    decompose->add_option("file", file)->required();
    auto* verify = app.add_subcommand("verify", "run the theorem checks");
    verify->add_option("file", file)->required();
    verify->add_option("--theorems", theorems, "comma-separated record id prefixes");
    verify->add_option("--budget", budget_n, "enumeration cap (subspaces visited)");
    auto* cat = app.add_subcommand("catalog", "named example algebras");
    auto* cat_list = cat->add_subcommand("list", "available entries");
    auto* cat_emit = cat->add_subcommand("emit", "print an entry in .lie form");
    cat_emit->add_option("name", cat_name)->required();
    cat_emit->add_option("--param", param_kvs, "K=V overrides");
    cat->require_subcommand(1);

    std::vector<const char*> argv;
    argv.push_back("lialg");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*cat_list) {
            for (const auto& e : catalog_entries())
                out << e.name << "(" << e.parameters << ")  " << e.note << "\n";
            return 0;
        }
        if (*cat_emit) {
            out << serialize(catalog(cat_name, parse_params(param_kvs)));
            return 0;
        }

        LieAlgebra l = load_file(file);
        EnumerationBudget budget = budget_for(l, budget_n);

        if (*info) {
            if (json) {
                out << report_json(file, l, {}, {});
            } else {
                StructureFlags fl = structure_flags(l);
                out << "field: " << l.field().str() << "\n";
                out << "dim: " << l.dim() << "\n";
                out << "basis:";
                for (const auto& lb : l.labels()) out << " " << lb;
                out << "\n";
                out << "solvable: " << (fl.solvable ? "true" : "false") << "\n";
                out << "nilpotent: " << (fl.nilpotent ? "true" : "false") << "\n";
                out << "abelian: " << (fl.abelian ? "true" : "false") << "\n";
                out << "completely_solvable: " << (fl.completely_solvable ? "true" : "false")
                    << "\n";
                out << "derived_length: " << fl.derived_length << "\n";
            }
            return 0;
        }
        if (*frattini) {
            Subspace phi = frattini_subalgebra(l, budget);
            if (json)
                out << report_json(file, l, {{"frattini", {phi}}}, {});
            else
                out << "phi = " << l.render_subspace(phi) << "\n";
            return 0;
        }
        if (*prefrattini) {
            auto pf = prefrattini_subalgebras(l, budget);
            if (json) {
                out << report_json(file, l, {{"prefrattini", pf.members}}, {});
            } else {
                for (const auto& m : pf.members) out << l.render_subspace(m) << "\n";
            }
            return 0;
        }
        if (*chief) {
            ChiefSeries cs = chief_series(l, budget);
            std::vector<Record> recs;
            for (int i = 1; i <= cs.length(); ++i)
                recs.push_back({"factor." + std::to_string(i), RecordStatus::pass,
                                cs.factor_class[static_cast<std::size_t>(i - 1)] ==
                                        FactorClass::frattini
                                    ? "frattini"
                                    : "complemented"});
            if (json) {
                out << report_json(file, l, {{"chief_series", cs.terms}}, recs);
            } else {
                for (int i = 0; i <= cs.length(); ++i) {
                    out << "A_" << i << " = "
                        << l.render_subspace(cs.terms[static_cast<std::size_t>(i)]);
                    if (i > 0) out << "  [" << recs[static_cast<std::size_t>(i - 1)].witness << "]";
                    out << "\n";
                }
            }
            return 0;
        }
        if (*complemented) {
            Verdict v = is_complemented(l, budget, route_from_string(route_name));
            if (json) {
                Record r{"complemented", RecordStatus::pass, v.value ? "true" : "false"};
                std::vector<Record> recs{r};
                if (!v.value) recs.push_back({"witness", RecordStatus::pass, v.witness});
                out << report_json(file, l, {}, recs);
            } else {
                out << (v.value ? "true" : "false") << "\n";
                if (!v.value) out << "witness: " << v.witness << "\n";
            }
            return 0;
        }
        if (*residual) {
            Subspace pi = prefrattini_residual(l, budget);
            Subspace e = elementary_residual(l, budget);
            if (json)
                out << report_json(file, l,
                                   {{"prefrattini_residual", {pi}}, {"elementary_residual", {e}}},
                                   {});
            else
                out << "pi = " << l.render_subspace(pi) << "\n"
                    << "E = " << l.render_subspace(e) << "\n";
            return 0;
        }
        if (*decompose) {
            auto outcome = complemented_decomposition(l, budget);
            if (!outcome.decomposition) {
                if (json)
                    out << report_json(file, l, {},
                                       {{"decomposition", RecordStatus::skipped,
                                         "not complemented: " + outcome.failure_witness}});
                else
                    out << "not complemented: " << outcome.failure_witness << "\n";
                return 0;
            }
            const auto& d = *outcome.decomposition;
            if (json) {
                out << report_json(file, l,
                                   {{"parts", d.parts}, {"derived_terms", d.derived_terms}}, {});
            } else {
                int n = static_cast<int>(d.parts.size()) - 1;
                for (int i = 0; i <= n; ++i)
                    out << "A_" << (n - i) << " = "
                        << l.render_subspace(d.parts[static_cast<std::size_t>(i)]) << "\n";
            }
            return 0;
        }
        if (*verify) {
            std::vector<std::string> select;
            if (!theorems.empty()) {
                std::stringstream ss(theorems);
                std::string tok;
                while (std::getline(ss, tok, ',')) select.push_back(tok);
            }
            VerificationReport rep = verify_theorems(l, budget, select, seed);
            if (json) {
                out << report_json(file, l, {}, rep.records);
            } else {
                for (const auto& r : rep.records) {
                    out << r.id << ": " << to_string(r.status);
                    if (!r.witness.empty()) out << "  " << r.witness;
                    out << "\n";
                }
            }
            bool any_fail = false, any_budget = false;
            for (const auto& r : rep.records) {
                any_fail |= r.status == RecordStatus::fail;
                any_budget |= r.status == RecordStatus::budget;
            }
            return any_fail ? 1 : any_budget ? 3 : 0;
        }
        err << "no command\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        err << "budget: " << e.what() << "\n";
        return 3;
    } catch (const InfiniteFieldEnumeration& e) {
        err << "unsupported: " << e.what() << "\n";
        return 3;
    } catch (const Unsupported& e) {
        err << "unsupported: " << e.what() << "\n";
        return 3;
    } catch (const TheoremViolation& e) {
        err << "theorem violation: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace lialg
