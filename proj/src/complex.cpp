#include "gentle/complex.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "gentle/errors.hpp"

namespace gentle {

namespace {
int sign_pow(long long exponent) { return (exponent % 2 + 2) % 2 == 0 ? 1 : -1; }
}  // namespace

std::optional<ParallelPair> make_pair(const GentleAlgebra& A, const PathWord& p,
                                      const PathWord& q) {
    if (p.src != q.src || p.tgt != q.tgt) return std::nullopt;
    if (!composable_word(A, p.arrows) || !composable_word(A, q.arrows)) return std::nullopt;
    if (!is_relation_chain(A, p)) return std::nullopt;
    if (!is_live(A, q)) return std::nullopt;
    return ParallelPair{p, q};
}

void Cochain::add_term(const Field& F, const ParallelPair& pair, const Scalar& coeff) {
    if (terms_.empty() && n_ == 0 && d_ == 0) {
        n_ = pair.n();
        d_ = pair.d();
    }
    if (pair.n() != n_ || pair.d() != d_)
        throw internal_error("cochain term of mixed bidegree");
    auto it = terms_.find(pair);
    Scalar c = F.normalize(it == terms_.end() ? coeff : it->second + coeff);
    if (F.is_zero(c)) {
        if (it != terms_.end()) terms_.erase(it);
    } else {
        terms_[pair] = c;
    }
}

Cochain Cochain::scaled(const Field& F, const Scalar& c) const {
    Cochain out(n_, d_);
    if (F.is_zero(c)) return out;
    for (const auto& [pair, coeff] : terms_) out.add_term(F, pair, F.mul(coeff, c));
    return out;
}

Cochain Cochain::sum(const Field& F, const Cochain& a, const Cochain& b) {
    if (a.zero()) return b;
    if (b.zero()) return a;
    Cochain out = a;
    for (const auto& [pair, coeff] : b.terms_) out.add_term(F, pair, coeff);
    return out;
}

bool Cochain::equal(const Field& F, const Cochain& other) const {
    Cochain diff = sum(F, *this, other.scaled(F, Scalar(-1)));
    return diff.zero();
}

PairBasis pair_basis(const GentleAlgebra& A, int n, int d, std::optional<int> cap) {
    PairBasis out;
    if (n < 0) return out;
    for (const PathWord& p : relation_chains_of_length(A, n)) {
        LiveEnumeration qs = live_words_between(A, p.src, p.tgt, d + p.degree, cap);
        out.exact = out.exact && qs.exact;
        for (const PathWord& q : qs.words) out.pairs.push_back({p, q});
    }
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
}

std::vector<std::pair<ParallelPair, int>> differential_terms(const GentleAlgebra& A,
                                                             const ParallelPair& v) {
    std::vector<std::pair<ParallelPair, int>> out;
    const int n = v.n();
    const int s = v.d();

    // Left extensions: arrows a with ap in P_{n+1} and aq live.
    std::vector<int> left;
    if (n == 0) {
        left = A.out_arrows[v.p.src];
    } else if (int a = A.chain_succ[v.p.first_arrow()]; a != -1) {
        left.push_back(a);
    }
    for (int a : left) {
        if (!v.q.trivial() && A.in_ideal(a, v.q.first_arrow())) continue;
        PathWord ap = concat(arrow_word(A, a), v.p);
        PathWord aq = concat(arrow_word(A, a), v.q);
        int coeff = sign_pow(static_cast<long long>(s) * (1 + A.arrow(a).degree));
        out.push_back({ParallelPair{ap, aq}, coeff});
    }

    // Right extensions: arrows b with pb in P_{n+1} and qb live.
    std::vector<int> right;
    if (n == 0) {
        right = A.in_arrows[v.p.src];
    } else if (int b = A.chain_pred[v.p.last_arrow()]; b != -1) {
        right.push_back(b);
    }
    for (int b : right) {
        if (!v.q.trivial() && A.in_ideal(v.q.last_arrow(), b)) continue;
        PathWord pb = concat(v.p, arrow_word(A, b));
        PathWord qb = concat(v.q, arrow_word(A, b));
        int coeff = sign_pow(static_cast<long long>(s) + n + 1);
        out.push_back({ParallelPair{pb, qb}, coeff});
    }
    return out;
}

Cochain differential(const GentleAlgebra& A, const Field& F, const Cochain& f) {
    Cochain out(f.n() + 1, f.d());
    for (const auto& [pair, coeff] : f.terms())
        for (const auto& [child, sign] : differential_terms(A, pair))
            out.add_term(F, child, F.mul(coeff, F.from_int(sign)));
    return out;
}

long long Matrix::rank(const Field& F) const {
    Matrix M = *this;
    long long rank = 0;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int pivot = -1;
        for (int r = row; r < rows_; ++r)
            if (!F.is_zero(M.at(r, col))) { pivot = r; break; }
        if (pivot == -1) continue;
        for (int c = 0; c < cols_; ++c) std::swap(M.at(pivot, c), M.at(row, c));
        Scalar inv = F.inv(M.at(row, col));
        for (int c = col; c < cols_; ++c) M.at(row, c) = F.mul(M.at(row, c), inv);
        for (int r = 0; r < rows_; ++r) {
            if (r == row || F.is_zero(M.at(r, col))) continue;
            Scalar factor = M.at(r, col);
            for (int c = col; c < cols_; ++c)
                M.at(r, c) = F.sub(M.at(r, c), F.mul(factor, M.at(row, c)));
        }
        ++row;
        ++rank;
    }
    return rank;
}

std::optional<std::vector<Scalar>> solve_linear(const Field& F, Matrix M,
                                                std::vector<Scalar> rhs, int pivot_limit) {
    const int rows = M.rows(), cols = M.cols();
    std::vector<int> pivot_col_of_row;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pivot = -1;
        for (int r = row; r < rows; ++r)
            if (!F.is_zero(M.at(r, col))) { pivot = r; break; }
        if (pivot == -1) continue;
        for (int c = 0; c < cols; ++c) std::swap(M.at(pivot, c), M.at(row, c));
        std::swap(rhs[pivot], rhs[row]);
        Scalar inv = F.inv(M.at(row, col));
        for (int c = col; c < cols; ++c) M.at(row, c) = F.mul(M.at(row, c), inv);
        rhs[row] = F.mul(rhs[row], inv);
        for (int r = 0; r < rows; ++r) {
            if (r == row || F.is_zero(M.at(r, col))) continue;
            Scalar factor = M.at(r, col);
            for (int c = col; c < cols; ++c)
                M.at(r, c) = F.sub(M.at(r, c), F.mul(factor, M.at(row, c)));
            rhs[r] = F.sub(rhs[r], F.mul(factor, rhs[row]));
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    for (int r = row; r < rows; ++r)
        if (!F.is_zero(rhs[r])) return std::nullopt;  // inconsistent

    std::vector<Scalar> x(cols, Scalar(0));
    for (size_t r = 0; r < pivot_col_of_row.size(); ++r)
        x[pivot_col_of_row[r]] = rhs[r];  // free variables set to zero

    // The leading pivot_limit coordinates must not involve free variables.
    for (int c = 0; c < pivot_limit; ++c) {
        bool is_pivot = std::find(pivot_col_of_row.begin(), pivot_col_of_row.end(), c) !=
                        pivot_col_of_row.end();
        if (!is_pivot)
            throw internal_error(
                "leading unknowns are not uniquely determined (dependent "
                "representatives)");
    }
    for (size_t r = 0; r < pivot_col_of_row.size(); ++r) {
        if (pivot_col_of_row[r] >= pivot_limit) continue;
        for (int c = pivot_limit; c < cols; ++c) {
            bool c_is_pivot = std::find(pivot_col_of_row.begin(), pivot_col_of_row.end(),
                                        c) != pivot_col_of_row.end();
            if (!c_is_pivot && !F.is_zero(M.at(static_cast<int>(r), c)))
                throw internal_error(
                    "leading unknowns are not uniquely determined (dependent "
                    "representatives)");
        }
    }
    return x;
}

namespace {

std::map<ParallelPair, int> index_of(const std::vector<ParallelPair>& basis) {
    std::map<ParallelPair, int> idx;
    for (size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = static_cast<int>(i);
    return idx;
}

/// Expands the differentials of `domain` in `target`; returns the matrix of
/// d restricted to the spanned spaces.  When `strict`, a differential term
/// missing from `target` is an internal error (complete enumerations only).
Matrix differential_matrix(const GentleAlgebra& A, const Field& F,
                           const std::vector<ParallelPair>& domain,
                           const std::map<ParallelPair, int>& target_index,
                           int target_size, bool strict) {
    Matrix M(target_size, static_cast<int>(domain.size()));
    for (size_t j = 0; j < domain.size(); ++j) {
        for (const auto& [child, sign] : differential_terms(A, domain[j])) {
            auto it = target_index.find(child);
            if (it == target_index.end()) {
                if (strict)
                    throw internal_error("differential escapes the enumerated pair basis");
                continue;
            }
            M.at(it->second, static_cast<int>(j)) =
                F.add(M.at(it->second, static_cast<int>(j)), F.from_int(sign));
        }
    }
    return M;
}

}  // namespace

DimResult cohomology_dim(const GentleAlgebra& A, const Field& F, int n, int d,
                         std::optional<int> cap) {
    if (n < 0) return {0, true};
    PairBasis cur = pair_basis(A, n, d, cap);
    std::optional<int> cap_next = cap ? std::optional<int>(*cap + 1) : std::nullopt;
    PairBasis next = pair_basis(A, n + 1, d, cap_next);
    PairBasis prev = n == 0 ? PairBasis{} : pair_basis(A, n - 1, d, cap);

    bool exact = cur.exact && next.exact && prev.exact;
    auto next_idx = index_of(next.pairs);
    auto cur_idx = index_of(cur.pairs);
    Matrix d_cur = differential_matrix(A, F, cur.pairs, next_idx,
                                       static_cast<int>(next.pairs.size()), exact);
    Matrix d_prev = differential_matrix(A, F, prev.pairs, cur_idx,
                                        static_cast<int>(cur.pairs.size()), exact);
    long long kernel = static_cast<long long>(cur.pairs.size()) - d_cur.rank(F);
    long long image = d_prev.rank(F);
    return {kernel - image, exact};
}

std::pair<int, int> internal_degree_window(const GentleAlgebra& A, int nmax) {
    // Attainable |q| values: walk live rays to natural termination, stopping
    // one period after entering a cycle (longer words only repeat degrees or
    // drift; the window below over-covers, which is harmless).
    int qmin = 0, qmax = 0;
    for (int a = 0; a < A.num_arrows(); ++a) {
        std::vector<bool> seen(A.num_arrows(), false);
        int cur = a, deg = 0, guard = 0;
        while (true) {
            if (seen[cur] && ++guard > A.num_arrows()) break;
            seen[cur] = true;
            deg += A.arrow(cur).degree;
            qmin = std::min(qmin, deg);
            qmax = std::max(qmax, deg);
            cur = A.live_succ[cur];
            if (cur == -1) break;
        }
    }
    int pmin = 0, pmax = 0;
    for (int len = 1; len <= nmax; ++len)
        for (const PathWord& p : relation_chains_of_length(A, len)) {
            pmin = std::min(pmin, p.degree);
            pmax = std::max(pmax, p.degree);
        }
    return {qmin - pmax, qmax - pmin};
}

std::vector<Scalar> reduce_mod_coboundaries(const GentleAlgebra& A, const Field& F,
                                            const Cochain& z,
                                            const std::vector<Cochain>& representatives,
                                            std::optional<int> cap) {
    const int n = z.n(), d = z.d();
    PairBasis cur = pair_basis(A, n, d, cap);
    PairBasis prev = n == 0 ? PairBasis{} : pair_basis(A, n - 1, d, cap);
    if ((!cur.exact || !prev.exact) && !cap)
        throw needs_cap_error("bidegree (" + std::to_string(n) + "," + std::to_string(d) +
                              ") is infinite-dimensional; rerun with a cap");
    auto cur_idx = index_of(cur.pairs);
    const int k = static_cast<int>(representatives.size());
    Matrix M(static_cast<int>(cur.pairs.size()), k + static_cast<int>(prev.pairs.size()));
    for (int j = 0; j < k; ++j) {
        if (representatives[j].zero()) continue;
        if (representatives[j].n() != n || representatives[j].d() != d)
            throw internal_error("representative bidegree mismatch");
        for (const auto& [pair, coeff] : representatives[j].terms()) {
            auto it = cur_idx.find(pair);
            if (it == cur_idx.end())
                throw internal_error("representative escapes the enumerated pair basis");
            M.at(it->second, j) = coeff;
        }
    }
    for (size_t j = 0; j < prev.pairs.size(); ++j) {
        for (const auto& [child, sign] : differential_terms(A, prev.pairs[j])) {
            auto it = cur_idx.find(child);
            if (it == cur_idx.end()) {
                if (cur.exact)
                    throw internal_error("differential escapes the enumerated pair basis");
                continue;
            }
            M.at(it->second, k + static_cast<int>(j)) =
                F.add(M.at(it->second, k + static_cast<int>(j)), F.from_int(sign));
        }
    }
    std::vector<Scalar> rhs(cur.pairs.size(), Scalar(0));
    for (const auto& [pair, coeff] : z.terms()) {
        auto it = cur_idx.find(pair);
        if (it == cur_idx.end())
            throw internal_error("cochain escapes the enumerated pair basis");
        rhs[it->second] = coeff;
    }
    auto sol = solve_linear(F, M, rhs, k);
    if (!sol)
        throw internal_error(
            "cocycle is not a combination of the representatives modulo "
            "coboundaries (basis enumeration missed a class)");
    return std::vector<Scalar>(sol->begin(), sol->begin() + k);
}

DimResult graded_center_dim(const GentleAlgebra& A, const Field& F, int d,
                            std::optional<int> cap) {
    // Commutation with the idempotents e_x confines the centre to closed
    // words; the arrow equations are solved on that slice.
    LiveEnumeration all = live_words_of_degree(A, d, cap);
    LiveEnumeration basis;
    basis.exact = all.exact;
    for (const PathWord& w : all.words)
        if (w.closed()) basis.words.push_back(w);
    bool exact = basis.exact;
    std::map<PathWord, int> basis_idx;
    for (size_t i = 0; i < basis.words.size(); ++i)
        basis_idx[basis.words[i]] = static_cast<int>(i);

    // Rows: for each arrow a, coordinates of z*a - (-1)^{d|a|} a*z in the
    // degree d+|a| slice.
    std::vector<std::map<PathWord, int>> target_idx(A.num_arrows());
    std::vector<int> row_offset(A.num_arrows() + 1, 0);
    std::vector<LiveEnumeration> targets(A.num_arrows());
    for (int a = 0; a < A.num_arrows(); ++a) {
        std::optional<int> cap_next = cap ? std::optional<int>(*cap + 1) : std::nullopt;
        targets[a] = live_words_of_degree(A, d + A.arrow(a).degree, cap_next);
        exact = exact && targets[a].exact;
        for (size_t i = 0; i < targets[a].words.size(); ++i)
            target_idx[a][targets[a].words[i]] = static_cast<int>(i);
        row_offset[a + 1] = row_offset[a] + static_cast<int>(targets[a].words.size());
    }
    Matrix M(row_offset[A.num_arrows()], static_cast<int>(basis.words.size()));
    for (size_t j = 0; j < basis.words.size(); ++j) {
        const PathWord& w = basis.words[j];
        for (int a = 0; a < A.num_arrows(); ++a) {
            const Arrow& ar = A.arrow(a);
            int koszul = sign_pow(static_cast<long long>(d) * ar.degree);
            // w * a: a traversed first.
            if (w.src == ar.tgt) {
                PathWord wa = concat(w, arrow_word(A, a));
                if (is_live(A, wa)) {
                    auto it = target_idx[a].find(wa);
                    if (it != target_idx[a].end()) {
                        int r = row_offset[a] + it->second;
                        M.at(r, static_cast<int>(j)) =
                            F.add(M.at(r, static_cast<int>(j)), F.from_int(1));
                    } else if (exact) {
                        throw internal_error("product escapes the enumerated slice");
                    }
                }
            }
            // a * w: w traversed first.
            if (ar.src == w.tgt) {
                PathWord aw = concat(arrow_word(A, a), w);
                if (is_live(A, aw)) {
                    auto it = target_idx[a].find(aw);
                    if (it != target_idx[a].end()) {
                        int r = row_offset[a] + it->second;
                        M.at(r, static_cast<int>(j)) =
                            F.add(M.at(r, static_cast<int>(j)), F.from_int(-koszul));
                    } else if (exact) {
                        throw internal_error("product escapes the enumerated slice");
                    }
                }
            }
        }
    }
    return {static_cast<long long>(basis.words.size()) - M.rank(F), exact};
}

std::vector<Atom> atom_decomposition(const GentleAlgebra& A, const Field& F,
                                     const Cochain& f) {
    std::vector<ParallelPair> support;
    for (const auto& [pair, coeff] : f.terms()) support.push_back(pair);
    const int n = static_cast<int>(support.size());

    // Union-find over the support: same level and a common child.
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

    std::map<ParallelPair, std::vector<int>> by_child;
    for (int i = 0; i < n; ++i)
        for (const auto& [child, sign] : differential_terms(A, support[i]))
            by_child[child].push_back(i);
    auto level = [&](int i) {
        return std::pair<int, int>(support[i].p.length(), support[i].q.length());
    };
    for (const auto& [child, owners] : by_child)
        for (size_t i = 1; i < owners.size(); ++i)
            if (level(owners[0]) == level(owners[i])) unite(owners[0], owners[i]);

    std::map<std::pair<std::pair<int, int>, int>, std::vector<int>> groups;
    for (int i = 0; i < n; ++i) groups[{level(i), find(i)}].push_back(i);

    std::vector<Atom> atoms;
    for (const auto& [key, members] : groups) {
        Atom atom;
        atom.level_n = key.first.first;
        atom.level_q = key.first.second;
        atom.element = Cochain(f.n(), f.d());
        bool vertex_type = true, all_two_children = true;
        for (int i : members) {
            atom.element.add_term(F, support[i], f.terms().at(support[i]));
            if (support[i].p.length() + support[i].q.length() > 0) vertex_type = false;
            bool has_left = false, has_right = false;
            // Recompute per-label children to decide whether 0 is adjacent.
            const ParallelPair& v = support[i];
            const int nn = v.n();
            if (nn == 0) {
                for (int a : A.out_arrows[v.p.src])
                    if (v.q.trivial() || !A.in_ideal(a, v.q.first_arrow())) has_left = true;
                for (int b : A.in_arrows[v.p.src])
                    if (v.q.trivial() || !A.in_ideal(v.q.last_arrow(), b)) has_right = true;
            } else {
                int a = A.chain_succ[v.p.first_arrow()];
                if (a != -1 && (v.q.trivial() || !A.in_ideal(a, v.q.first_arrow())))
                    has_left = true;
                int b = A.chain_pred[v.p.last_arrow()];
                if (b != -1 && (v.q.trivial() || !A.in_ideal(v.q.last_arrow(), b)))
                    has_right = true;
            }
            if (!has_left || !has_right) all_two_children = false;
        }
        atom.type = vertex_type ? AtomType::Vertex
                                : (all_two_children ? AtomType::TypeATilde : AtomType::TypeA);
        atoms.push_back(atom);
    }
    return atoms;
}

AtomType classify_atom(const GentleAlgebra& A, const Field& F, const Cochain& a) {
    if (a.zero()) throw domain_error("classify_atom: zero cochain");
    if (!differential(A, F, a).zero())
        throw domain_error("classify_atom: input is not a cocycle");
    std::vector<Atom> atoms = atom_decomposition(A, F, a);
    if (atoms.size() != 1) throw domain_error("classify_atom: input is not atomic");
    return atoms.front().type;
}

}  // namespace gentle
