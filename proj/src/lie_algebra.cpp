#include "lialg/lie_algebra.hpp"

#include <algorithm>
#include <set>

namespace lialg {

int LieAlgebra::label_index(const std::string& name) const {
    for (int i = 0; i < dim_; ++i)
        if (labels_[static_cast<std::size_t>(i)] == name) return i;
    throw UnknownLabel("unknown basis label '" + name + "'");
}

Vec LieAlgebra::bracket_basis(int i, int j) const {
    Vec v;
    v.reserve(static_cast<std::size_t>(dim_));
    for (int k = 0; k < dim_; ++k) v.push_back(c(i, j, k));
    return v;
}

Vec LieAlgebra::bracket(const Vec& u, const Vec& v) const {
    if (static_cast<int>(u.size()) != dim_ || static_cast<int>(v.size()) != dim_)
        throw DimensionMismatch("bracket operand length");
    Vec out = zero_vec(field_, dim_);
    for (int i = 0; i < dim_; ++i) {
        if (u[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; j < dim_; ++j) {
            if (i == j || v[static_cast<std::size_t>(j)].is_zero()) continue;
            Scalar f = u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)];
            for (int k = 0; k < dim_; ++k) {
                const Scalar& cc = c(i, j, k);
                if (!cc.is_zero()) out[static_cast<std::size_t>(k)] += f * cc;
            }
        }
    }
    return out;
}

Matrix LieAlgebra::ad(const Vec& x) const {
    Matrix m(field_, dim_, dim_);
    for (int j = 0; j < dim_; ++j) {
        Vec ej = zero_vec(field_, dim_);
        ej[static_cast<std::size_t>(j)] = Scalar::one(field_);
        Vec col = bracket(x, ej);
        for (int i = 0; i < dim_; ++i) m.at(i, j) = col[static_cast<std::size_t>(i)];
    }
    return m;
}

std::string LieAlgebra::render_vector(const Vec& v) const {
    std::string out;
    for (int i = 0; i < dim_; ++i) {
        const Scalar& s = v[static_cast<std::size_t>(i)];
        if (s.is_zero()) continue;
        if (!out.empty()) out += "+";
        if (!s.is_one()) out += render(s) + "*";
        out += labels_[static_cast<std::size_t>(i)];
    }
    return out.empty() ? "0" : out;
}

std::string LieAlgebra::render_subspace(const Subspace& s) const {
    std::string out = "span(";
    for (int r = 0; r < s.dim(); ++r) {
        if (r) out += ", ";
        out += render_vector(s.basis().row(r));
    }
    return out + ")";
}

bool LieAlgebra::operator==(const LieAlgebra& o) const {
    return field_ == o.field_ && dim_ == o.dim_ && labels_ == o.labels_ && table_ == o.table_;
}

void LieAlgebra::check_structure() const {
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k) {
                if (i == j && !c(i, j, k).is_zero())
                    throw SelfBracketNonzero("[x,x] != 0 at basis index " + std::to_string(i));
                if (c(i, j, k) != -c(j, i, k))
                    throw Error("antisymmetry violated internally");
            }
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j)
            for (int k = j + 1; k < dim_; ++k) {
                Vec ei = zero_vec(field_, dim_), ej = ei, ek = ei;
                ei[static_cast<std::size_t>(i)] = Scalar::one(field_);
                ej[static_cast<std::size_t>(j)] = Scalar::one(field_);
                ek[static_cast<std::size_t>(k)] = Scalar::one(field_);
                Vec s = vec_add(vec_add(bracket(bracket_basis(i, j), ek),
                                        bracket(bracket_basis(j, k), ei)),
                                bracket(bracket_basis(k, i), ej));
                if (!vec_is_zero(s))
                    throw JacobiViolation("Jacobi identity fails on basis triple (" +
                                              labels_[static_cast<std::size_t>(i)] + ", " +
                                              labels_[static_cast<std::size_t>(j)] + ", " +
                                              labels_[static_cast<std::size_t>(k)] + "): sum = " +
                                              render_vector(s),
                                          i, j, k);
            }
}

LieAlgebra validate_algebra(FieldDescriptor field, int dim, std::vector<std::string> labels,
                            const std::vector<BracketAssignment>& assignments) {
    if (static_cast<int>(labels.size()) != dim)
        throw BadParameters("label count does not match dimension");
    {
        std::set<std::string> seen(labels.begin(), labels.end());
        if (static_cast<int>(seen.size()) != dim)
            throw BadParameters("basis labels must be distinct");
    }
    std::vector<Scalar> table(static_cast<std::size_t>(dim) * dim * dim, Scalar::zero(field));
    auto slot = [&](int i, int j, int k) -> Scalar& {
        return table[(static_cast<std::size_t>(i) * dim + j) * dim + k];
    };
    LieAlgebra shell(field, dim, labels, table); // for label lookup only
    std::set<std::pair<int, int>> assigned;
    for (const auto& a : assignments) {
        int i = shell.label_index(a.left);
        int j = shell.label_index(a.right);
        Vec rhs = zero_vec(field, dim);
        for (const auto& [coef, name] : a.terms) {
            if (coef.field() != field) throw FieldMismatch("bracket coefficient field mismatch");
            rhs[static_cast<std::size_t>(shell.label_index(name))] += coef;
        }
        if (i == j) {
            if (!vec_is_zero(rhs))
                throw SelfBracketNonzero("nonzero bracket [" + a.left + "," + a.left + "]");
            continue;
        }
        auto key = std::minmax(i, j);
        if (!assigned.insert({key.first, key.second}).second)
            throw DuplicateBracket("bracket [" + a.left + "," + a.right + "] assigned twice");
        for (int k = 0; k < dim; ++k) {
            slot(i, j, k) = rhs[static_cast<std::size_t>(k)];
            slot(j, i, k) = -rhs[static_cast<std::size_t>(k)];
        }
    }
    LieAlgebra out(field, dim, std::move(labels), std::move(table));
    out.check_structure();
    return out;
}

// Spans and series ------------------------------------------------------------

Subspace bracket_span(const LieAlgebra& l, const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != l.dim() || v.ambient_dim() != l.dim())
        throw DimensionMismatch("bracket_span ambient mismatch");
    std::vector<Vec> gens;
    for (int a = 0; a < u.dim(); ++a)
        for (int b = 0; b < v.dim(); ++b)
            gens.push_back(l.bracket(u.basis().row(a), v.basis().row(b)));
    return canonical_basis(gens, l.dim(), l.field());
}

SeriesChain derived_series(const LieAlgebra& l) {
    SeriesChain chain{SeriesKind::derived, {l.full_space()}};
    for (;;) {
        const Subspace& cur = chain.terms.back();
        Subspace next = bracket_span(l, cur, cur);
        if (next == cur) break;
        chain.terms.push_back(next);
        if (next.is_zero()) break;
    }
    return chain;
}

SeriesChain lower_central_series(const LieAlgebra& l) {
    SeriesChain chain{SeriesKind::lower_central, {l.full_space()}};
    for (;;) {
        const Subspace& cur = chain.terms.back();
        Subspace next = bracket_span(l, cur, l.full_space());
        if (next == cur) break;
        chain.terms.push_back(next);
        if (next.is_zero()) break;
    }
    return chain;
}

Subspace nilpotent_residual(const LieAlgebra& l) {
    return lower_central_series(l).terms.back();
}

Subspace centralizer(const LieAlgebra& l, const Subspace& s) {
    if (s.ambient_dim() != l.dim()) throw DimensionMismatch("centralizer ambient mismatch");
    int n = l.dim();
    Matrix sys(l.field(), s.dim() * n, n);
    for (int a = 0; a < s.dim(); ++a) {
        Vec srow = s.basis().row(a);
        for (int i = 0; i < n; ++i) {
            Vec ei = zero_vec(l.field(), n);
            ei[static_cast<std::size_t>(i)] = Scalar::one(l.field());
            Vec br = l.bracket(ei, srow);
            for (int r = 0; r < n; ++r) sys.at(a * n + r, i) = br[static_cast<std::size_t>(r)];
        }
    }
    Matrix k = kernel_basis(sys);
    return Subspace::from_canonical_rows(std::move(k), n);
}

Subspace normalizer(const LieAlgebra& l, const Subspace& s) {
    if (!is_subalgebra(l, s)) throw NotASubalgebra("normalizer requires a subalgebra");
    int n = l.dim();
    int m = n - s.dim();
    Matrix sys(l.field(), s.dim() * m, n);
    for (int a = 0; a < s.dim(); ++a) {
        Vec srow = s.basis().row(a);
        for (int i = 0; i < n; ++i) {
            Vec ei = zero_vec(l.field(), n);
            ei[static_cast<std::size_t>(i)] = Scalar::one(l.field());
            Vec q = coords_mod(s, l.bracket(ei, srow));
            for (int r = 0; r < m; ++r) sys.at(a * m + r, i) = q[static_cast<std::size_t>(r)];
        }
    }
    Matrix k = kernel_basis(sys);
    return Subspace::from_canonical_rows(std::move(k), n);
}

Subspace center(const LieAlgebra& l) { return centralizer(l, l.full_space()); }

bool is_subalgebra(const LieAlgebra& l, const Subspace& s) {
    for (int a = 0; a < s.dim(); ++a)
        for (int b = a + 1; b < s.dim(); ++b)
            if (!s.contains(l.bracket(s.basis().row(a), s.basis().row(b)))) return false;
    return true;
}

bool is_ideal(const LieAlgebra& l, const Subspace& s) {
    for (int i = 0; i < l.dim(); ++i) {
        Vec ei = zero_vec(l.field(), l.dim());
        ei[static_cast<std::size_t>(i)] = Scalar::one(l.field());
        for (int a = 0; a < s.dim(); ++a)
            if (!s.contains(l.bracket(ei, s.basis().row(a)))) return false;
    }
    return true;
}

bool is_abelian_subspace(const LieAlgebra& l, const Subspace& s) {
    for (int a = 0; a < s.dim(); ++a)
        for (int b = a + 1; b < s.dim(); ++b)
            if (!vec_is_zero(l.bracket(s.basis().row(a), s.basis().row(b)))) return false;
    return true;
}

bool is_nilpotent_subalgebra(const LieAlgebra& l, const Subspace& s) {
    Subspace cur = s;
    for (;;) {
        Subspace next = bracket_span(l, cur, s);
        if (next == cur) return cur.is_zero();
        cur = next;
        if (cur.is_zero()) return true;
    }
}

StructureFlags structure_flags(const LieAlgebra& l) {
    SeriesChain ds = derived_series(l);
    SeriesChain lc = lower_central_series(l);
    bool solvable = ds.reaches_zero();
    bool nilpotent = lc.reaches_zero();
    Subspace l2 = ds.terms.size() > 1 ? ds.terms[1] : ds.terms[0];
    bool abelian = l2.is_zero();
    bool completely_solvable;
    if (l2.is_zero()) {
        completely_solvable = true;
    } else {
        InducedAlgebra sub = induced_algebra(l, l2, InducedMode::subalgebra);
        completely_solvable = lower_central_series(sub.algebra).reaches_zero();
    }
    int derived_length = solvable ? static_cast<int>(ds.terms.size()) - 1 : -1;
    return StructureFlags{solvable, nilpotent, abelian, completely_solvable, derived_length};
}

// Induced algebras -------------------------------------------------------------

Subspace InducedAlgebra::pull_up(const Subspace& child_sub) const {
    Subspace img = apply_map(embed, child_sub);
    if (mode == InducedMode::quotient) return sum(img, carrier);
    return img;
}

Subspace InducedAlgebra::push_down(const Subspace& parent_sub) const {
    return apply_map(project, parent_sub);
}

namespace {

std::vector<std::string> child_labels(const LieAlgebra& l, const Subspace& s, InducedMode mode) {
    std::vector<std::string> out;
    if (mode == InducedMode::quotient) {
        for (int c : complement_positions(s))
            out.push_back(l.labels()[static_cast<std::size_t>(c)]);
        return out;
    }
    for (int r = 0; r < s.dim(); ++r) {
        Vec row = s.basis().row(r);
        int nonzero = -1;
        bool standard = true;
        for (int c = 0; c < s.ambient_dim(); ++c) {
            if (row[static_cast<std::size_t>(c)].is_zero()) continue;
            if (nonzero >= 0 || !row[static_cast<std::size_t>(c)].is_one()) { standard = false; break; }
            nonzero = c;
        }
        if (standard && nonzero >= 0)
            out.push_back(l.labels()[static_cast<std::size_t>(nonzero)]);
        else
            out.push_back("v" + std::to_string(r));
    }
    return out;
}

} // namespace

InducedAlgebra induced_algebra(const LieAlgebra& l, const Subspace& s, InducedMode mode) {
    if (s.ambient_dim() != l.dim()) throw DimensionMismatch("induced ambient mismatch");
    FieldDescriptor f = l.field();
    int n = l.dim();
    if (mode == InducedMode::subalgebra) {
        if (!is_subalgebra(l, s)) throw NotClosed("carrier is not closed under the bracket");
        int m = s.dim();
        Matrix embed(f, n, m);
        for (int a = 0; a < m; ++a)
            for (int r = 0; r < n; ++r) embed.at(r, a) = s.basis().at(a, r);
        Matrix project(f, m, n);
        for (int a = 0; a < m; ++a)
            project.at(a, s.pivots()[static_cast<std::size_t>(a)]) = Scalar::one(f);
        std::vector<BracketAssignment> assigns;
        std::vector<std::string> labels = child_labels(l, s, mode);
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b) {
                Vec br = l.bracket(s.basis().row(a), s.basis().row(b));
                Vec coords = s.coordinates(br);
                BracketAssignment as{labels[static_cast<std::size_t>(a)],
                                     labels[static_cast<std::size_t>(b)],
                                     {}};
                for (int k = 0; k < m; ++k)
                    if (!coords[static_cast<std::size_t>(k)].is_zero())
                        as.terms.push_back({coords[static_cast<std::size_t>(k)],
                                            labels[static_cast<std::size_t>(k)]});
                assigns.push_back(std::move(as));
            }
        LieAlgebra child = validate_algebra(f, m, labels, assigns);
        InducedAlgebra out{std::move(child), s, mode, std::move(embed), std::move(project)};
        // consistency: embed([u,v]_child) == [embed u, embed v]_parent on basis pairs
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
                Vec ea = zero_vec(f, m), eb = zero_vec(f, m);
                ea[static_cast<std::size_t>(a)] = Scalar::one(f);
                eb[static_cast<std::size_t>(b)] = Scalar::one(f);
                Vec lhs = out.embed.apply(out.algebra.bracket(ea, eb));
                Vec rhs = l.bracket(out.embed.apply(ea), out.embed.apply(eb));
                if (lhs != rhs) throw Error("induced subalgebra maps do not commute with brackets");
            }
        return out;
    }
    if (!is_ideal(l, s)) throw NotAnIdeal("quotient carrier is not an ideal");
    std::vector<int> comp = complement_positions(s);
    int m = static_cast<int>(comp.size());
    Matrix embed(f, n, m);
    for (int a = 0; a < m; ++a) embed.at(comp[static_cast<std::size_t>(a)], a) = Scalar::one(f);
    Matrix project(f, m, n);
    for (int c = 0; c < n; ++c) {
        Vec ec = zero_vec(f, n);
        ec[static_cast<std::size_t>(c)] = Scalar::one(f);
        Vec q = coords_mod(s, ec);
        for (int a = 0; a < m; ++a) project.at(a, c) = q[static_cast<std::size_t>(a)];
    }
    std::vector<std::string> labels = child_labels(l, s, mode);
    std::vector<BracketAssignment> assigns;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            Vec br = l.bracket(embed.apply([&] {
                                   Vec e = zero_vec(f, m);
                                   e[static_cast<std::size_t>(a)] = Scalar::one(f);
                                   return e;
                               }()),
                               embed.apply([&] {
                                   Vec e = zero_vec(f, m);
                                   e[static_cast<std::size_t>(b)] = Scalar::one(f);
                                   return e;
                               }()));
            Vec coords = project.apply(br);
            BracketAssignment as{labels[static_cast<std::size_t>(a)],
                                 labels[static_cast<std::size_t>(b)],
                                 {}};
            for (int k = 0; k < m; ++k)
                if (!coords[static_cast<std::size_t>(k)].is_zero())
                    as.terms.push_back({coords[static_cast<std::size_t>(k)],
                                        labels[static_cast<std::size_t>(k)]});
            assigns.push_back(std::move(as));
        }
    LieAlgebra child = validate_algebra(f, m, labels, assigns);
    InducedAlgebra out{std::move(child), s, mode, std::move(embed), std::move(project)};
    // consistency: project([x,y]_parent) == [project x, project y]_child on basis pairs
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec ei = zero_vec(f, n), ej = zero_vec(f, n);
            ei[static_cast<std::size_t>(i)] = Scalar::one(f);
            ej[static_cast<std::size_t>(j)] = Scalar::one(f);
            Vec lhs = out.project.apply(l.bracket(ei, ej));
            Vec rhs = out.algebra.bracket(out.project.apply(ei), out.project.apply(ej));
            if (lhs != rhs) throw Error("quotient maps do not commute with brackets");
        }
    return out;
}

Subspace ideal_closure(const LieAlgebra& l, const Subspace& s) {
    Subspace cur = s;
    for (;;) {
        Subspace next = sum(cur, bracket_span(l, l.full_space(), cur));
        if (next == cur) return cur;
        cur = next;
    }
}

Subspace subalgebra_closure(const LieAlgebra& l, const Subspace& s) {
    Subspace cur = s;
    for (;;) {
        Subspace next = sum(cur, bracket_span(l, cur, cur));
        if (next == cur) return cur;
        cur = next;
    }
}

// Constructions ----------------------------------------------------------------

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
    if (a.field() != b.field()) throw FieldMismatch("direct sum over different fields");
    FieldDescriptor f = a.field();
    int n = a.dim() + b.dim();
    std::vector<std::string> labels = a.labels();
    std::set<std::string> used(labels.begin(), labels.end());
    for (const auto& lb : b.labels()) {
        std::string name = lb;
        while (used.count(name)) name += "'";
        used.insert(name);
        labels.push_back(name);
    }
    std::vector<Scalar> table(static_cast<std::size_t>(n) * n * n, Scalar::zero(f));
    auto slot = [&](int i, int j, int k) -> Scalar& {
        return table[(static_cast<std::size_t>(i) * n + j) * n + k];
    };
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            Vec br = a.bracket_basis(i, j);
            for (int k = 0; k < a.dim(); ++k) slot(i, j, k) = br[static_cast<std::size_t>(k)];
        }
    for (int i = 0; i < b.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j) {
            Vec br = b.bracket_basis(i, j);
            for (int k = 0; k < b.dim(); ++k)
                slot(a.dim() + i, a.dim() + j, a.dim() + k) = br[static_cast<std::size_t>(k)];
        }
    LieAlgebra out(f, n, std::move(labels), std::move(table));
    out.check_structure();
    return out;
}

LieAlgebra semidirect_type1(int a_dim, const std::vector<Matrix>& acting_matrices) {
    if (a_dim < 1 || acting_matrices.empty())
        throw BadParameters("type-I product needs a_dim >= 1 and at least one acting matrix");
    FieldDescriptor f = acting_matrices.front().field();
    for (const auto& m : acting_matrices) {
        if (m.rows() != a_dim || m.cols() != a_dim)
            throw BadParameters("acting matrix shape must match a_dim");
        if (m.field() != f) throw FieldMismatch("acting matrices over different fields");
        if (!is_semisimple(m)) throw NonSemisimpleAction("acting matrix has non-squarefree minimal polynomial");
    }
    for (std::size_t i = 0; i < acting_matrices.size(); ++i)
        for (std::size_t j = i + 1; j < acting_matrices.size(); ++j)
            if (!(acting_matrices[i] * acting_matrices[j] == acting_matrices[j] * acting_matrices[i]))
                throw NonCommutingAction("acting matrices do not commute");
    int k = static_cast<int>(acting_matrices.size());
    std::vector<std::string> labels;
    for (int i = 0; i < a_dim; ++i) labels.push_back("a" + std::to_string(i));
    for (int i = 0; i < k; ++i) labels.push_back("t" + std::to_string(i));
    std::vector<BracketAssignment> assigns;
    for (int i = 0; i < a_dim; ++i)
        for (int j = 0; j < k; ++j) {
            BracketAssignment as{labels[static_cast<std::size_t>(i)],
                                 labels[static_cast<std::size_t>(a_dim + j)],
                                 {}};
            for (int r = 0; r < a_dim; ++r) {
                const Scalar& cc = acting_matrices[static_cast<std::size_t>(j)].at(r, i);
                if (!cc.is_zero()) as.terms.push_back({cc, labels[static_cast<std::size_t>(r)]});
            }
            assigns.push_back(std::move(as));
        }
    return validate_algebra(f, a_dim + k, labels, assigns);
}

Matrix exp_ad(const LieAlgebra& l, const Vec& x) {
    FieldDescriptor f = l.field();
    int n = l.dim();
    Matrix a = l.ad(x);
    int nil_index = -1;
    Matrix power = Matrix::identity(f, n);
    for (int k = 0; k <= n; ++k) {
        if (power.is_zero()) { nil_index = k; break; }
        power = power * a;
    }
    if (nil_index < 0) throw NotNilpotent("ad x is not nilpotent");
    std::int64_t p = f.characteristic();
    if (p > 0 && nil_index > p)
        throw CharacteristicObstruction("(ad x)^p != 0 in characteristic " + std::to_string(p));
    Matrix out(f, n, n);
    Matrix term = Matrix::identity(f, n);
    Scalar factorial = Scalar::one(f);
    for (int k = 0; k < nil_index; ++k) {
        if (k > 0) {
            term = term * a;
            factorial = factorial * Scalar::from_int(k, f);
        }
        out = out + term.scaled(factorial.inverse());
    }
    // automorphism check on basis pairs
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec ei = zero_vec(f, n), ej = zero_vec(f, n);
            ei[static_cast<std::size_t>(i)] = Scalar::one(f);
            ej[static_cast<std::size_t>(j)] = Scalar::one(f);
            Vec lhs = out.apply(l.bracket_basis(i, j));
            Vec rhs = l.bracket(out.apply(ei), out.apply(ej));
            if (lhs != rhs) throw Error("exp(ad x) failed the automorphism check");
        }
    return out;
}

std::pair<Subspace, Subspace> fitting_decomposition(const LieAlgebra& l, const Subspace& target,
                                                    const Subspace& e) {
    if (!is_subalgebra(l, e)) throw NotASubalgebra("Fitting decomposition needs a subalgebra action");
    Subspace br = bracket_span(l, e, target);
    if (!target.contains(br)) throw NotInvariant("target is not invariant under the action");
    FieldDescriptor f = l.field();
    int n = l.dim();
    std::vector<Matrix> ops;
    for (int a = 0; a < e.dim(); ++a) ops.push_back(l.ad(e.basis().row(a)));

    // Fitting-null part: largest invariant subspace inside the joint kernels
    Subspace x = target;
    for (const auto& op : ops) {
        Matrix k = kernel_basis(op.pow(n));
        x = intersect(x, Subspace::from_canonical_rows(std::move(k), n));
    }
    for (;;) {
        // shrink to invariance: v in x with (ad e) v in x for every e
        int m = x.dim();
        if (m == 0) break;
        int cm = n - m;
        Matrix sys(f, static_cast<int>(ops.size()) * cm, m);
        for (std::size_t oi = 0; oi < ops.size(); ++oi)
            for (int a = 0; a < m; ++a) {
                Vec img = coords_mod(x, ops[oi].apply(x.basis().row(a)));
                for (int r = 0; r < cm; ++r)
                    sys.at(static_cast<int>(oi) * cm + r, a) = img[static_cast<std::size_t>(r)];
            }
        Matrix coeff = kernel_basis(sys);
        if (coeff.rows() == m) break; // already invariant
        std::vector<Vec> rows;
        for (int r = 0; r < coeff.rows(); ++r) {
            Vec v = zero_vec(f, n);
            for (int a = 0; a < m; ++a)
                v = vec_add(v, vec_scale(coeff.at(r, a), x.basis().row(a)));
            rows.push_back(std::move(v));
        }
        x = canonical_basis(rows, n, f);
    }

    // Fitting-one part: stable image of the iterated action
    Subspace y = target;
    for (;;) {
        std::vector<Vec> rows;
        for (const auto& op : ops)
            for (int r = 0; r < y.dim(); ++r) rows.push_back(op.apply(y.basis().row(r)));
        Subspace next = canonical_basis(rows, n, f);
        if (next == y) break;
        y = next;
    }

    if (!intersect(x, y).is_zero() || x.dim() + y.dim() != target.dim())
        throw DecompositionFailure("Fitting parts do not sum directly to the target");
    return {x, y};
}

Subspace nilradical_char0(const LieAlgebra& l) {
    if (l.field().is_prime_field())
        throw Unsupported("characteristic-0 nilradical route requires the rationals");
    if (!derived_series(l).reaches_zero())
        throw NonSolvable("characteristic-0 nilradical route requires a solvable algebra");
    FieldDescriptor f = l.field();
    int n = l.dim();
    // associative envelope of ad L, as a linear span closed under products
    std::vector<Matrix> gens;
    for (int i = 0; i < n; ++i) {
        Vec ei = zero_vec(f, n);
        ei[static_cast<std::size_t>(i)] = Scalar::one(f);
        gens.push_back(l.ad(ei));
    }
    auto flatten = [&](const Matrix& m) {
        Vec v;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) v.push_back(m.at(i, j));
        return v;
    };
    std::vector<Matrix> envelope;
    Subspace span = Subspace::zero(f, n * n);
    auto try_add = [&](const Matrix& m) {
        Vec fl = flatten(m);
        if (span.contains(fl)) return false;
        span = sum(span, canonical_basis({fl}, n * n, f));
        envelope.push_back(m);
        return true;
    };
    for (const auto& g : gens) try_add(g);
    for (std::size_t i = 0; i < envelope.size(); ++i)
        for (const auto& g : gens) try_add(envelope[i] * g);
    // x is in the nilradical iff ad x lies in the radical of the envelope,
    // i.e. tr(ad x * r) = 0 for every r in the envelope (char 0)
    Matrix sys(f, static_cast<int>(envelope.size()), n);
    for (std::size_t r = 0; r < envelope.size(); ++r)
        for (int i = 0; i < n; ++i) {
            Matrix prod = gens[static_cast<std::size_t>(i)] * envelope[r];
            Scalar tr = Scalar::zero(f);
            for (int d = 0; d < n; ++d) tr += prod.at(d, d);
            sys.at(static_cast<int>(r), i) = tr;
        }
    Subspace nr = Subspace::from_canonical_rows(kernel_basis(sys), n);
    if (!is_ideal(l, nr)) throw Unsupported("characteristic-0 nilradical candidate is not an ideal");
    if (!nr.is_zero()) {
        InducedAlgebra sub = induced_algebra(l, nr, InducedMode::subalgebra);
        if (!lower_central_series(sub.algebra).reaches_zero())
            throw Unsupported("characteristic-0 nilradical candidate is not nilpotent");
    }
    return nr;
}

} // namespace lialg
