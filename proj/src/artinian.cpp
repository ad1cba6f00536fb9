#include "blueprint/artinian.hpp"

#include "blueprint/error.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace blueprint {

namespace {

void extend_multisets(const Face& f, std::size_t extra, std::size_t from, std::vector<Vertex>& current,
                      std::vector<Monomial>& out) {
    if (extra == 0) {
        std::vector<Vertex> factors = f.vertices();
        factors.insert(factors.end(), current.begin(), current.end());
        out.emplace_back(std::move(factors));
        return;
    }
    for (std::size_t i = from; i < f.size(); ++i) {
        current.push_back(f[i]);
        extend_multisets(f, extra - 1, i, current, out);
        current.pop_back();
    }
}

bool same_subcomplex(const std::optional<SimplicialComplex>& a, const std::optional<SimplicialComplex>& b) {
    const bool a_void = !a || a->is_void();
    const bool b_void = !b || b->is_void();
    if (a_void || b_void) return a_void == b_void;
    return *a == *b;
}

void require_consecutive(const Presentation& pk, const Presentation& pk1) {
    if (!pk.same_module(pk1) || pk1.degree() != pk.degree() + 1) {
        throw Error(ErrorCode::DegreeMismatch, "expected consecutive degrees of one module, got " +
                                                   std::to_string(pk.degree()) + " and " +
                                                   std::to_string(pk1.degree()));
    }
}

}  // namespace

Monomial::Monomial(std::vector<Vertex> factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end());
}

Face Monomial::support() const {
    std::vector<Vertex> s = factors_;
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return Face(std::move(s));
}

int Monomial::exponent(Vertex v) const {
    return static_cast<int>(std::count(factors_.begin(), factors_.end(), v));
}

Monomial Monomial::times(Vertex v) const {
    Monomial m = *this;
    m.factors_.insert(std::upper_bound(m.factors_.begin(), m.factors_.end(), v), v);
    return m;
}

Monomial Monomial::times(const Monomial& other) const {
    std::vector<Vertex> f = factors_;
    f.insert(f.end(), other.factors_.begin(), other.factors_.end());
    return Monomial(std::move(f));
}

std::string Monomial::to_string() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < factors_.size();) {
        std::size_t j = i;
        while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(factors_[i]);
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s;
}

LinearForm LinearForm::variable(int n, Vertex v) {
    Vector c(static_cast<std::size_t>(n));
    c.at(static_cast<std::size_t>(v)) = 1;
    return LinearForm(std::move(c));
}

Rational LinearForm::operator[](Vertex v) const {
    const auto i = static_cast<std::size_t>(v);
    return i < coefficients_.size() ? coefficients_[i] : Rational(0);
}

LinearForm LinearForm::scaled(const Rational& factor) const {
    Vector c = coefficients_;
    for (auto& x : c) x *= factor;
    return LinearForm(std::move(c));
}

LinearForm LinearForm::operator+(const LinearForm& other) const {
    Vector c(std::max(coefficients_.size(), other.coefficients_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = (*this)[static_cast<Vertex>(i)] + other[static_cast<Vertex>(i)];
    }
    return LinearForm(std::move(c));
}

std::vector<Monomial> monomial_basis(const SimplicialComplex& delta, const std::optional<SimplicialComplex>& gamma,
                                     int k) {
    if (gamma && !gamma->is_subcomplex_of(delta)) {
        throw Error(ErrorCode::NotSubcomplex, "relative module needs a subcomplex");
    }
    std::vector<Monomial> out;
    if (k < 0) return out;
    for (int dim = -1; dim <= delta.dimension() && dim < k; ++dim) {
        for (const Face& f : delta.faces(dim)) {
            if (gamma && gamma->contains(f)) continue;
            if (f.empty()) {
                if (k == 0) out.emplace_back();
                continue;
            }
            std::vector<Vertex> scratch;
            extend_multisets(f, static_cast<std::size_t>(k) - f.size(), 0, scratch, out);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Presentation::Presentation(SimplicialComplex delta, std::optional<SimplicialComplex> gamma, Realization r, int k)
    : delta_(std::move(delta)), gamma_(std::move(gamma)), realization_(std::move(r)), degree_(k) {
    if (gamma_ && gamma_->is_void()) gamma_.reset();
    if (gamma_ && !gamma_->is_subcomplex_of(delta_)) {
        throw Error(ErrorCode::NotSubcomplex, "relative module needs a subcomplex");
    }
    const ProperCheck proper = is_proper(delta_, realization_);
    if (!proper.proper) {
        std::string face;
        for (Vertex v : *proper.witness) face += (face.empty() ? "" : ",") + std::to_string(v);
        throw Error(ErrorCode::ImproperRealization, "face {" + face + "} does not span a simplex");
    }

    basis_ = monomial_basis(delta_, gamma_, k);
    for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);

    const auto lower = monomial_basis(delta_, gamma_, k - 1);
    const std::size_t d = static_cast<std::size_t>(realization_.dimension());
    const std::vector<Vertex> vertices = delta_.vertices();
    relations_ = Matrix(basis_.size(), lower.size() * d);
    relation_space_ = EchelonBasis(basis_.size());
    for (std::size_t m = 0; m < lower.size(); ++m) {
        std::vector<std::pair<Vertex, std::size_t>> products;
        for (Vertex v : vertices) {
            if (auto idx = index_of(lower[m].times(v))) products.emplace_back(v, *idx);
        }
        for (std::size_t j = 0; j < d; ++j) {
            const std::size_t col = m * d + j;
            for (auto [v, idx] : products) relations_(idx, col) += realization_[v][j];
            relation_space_.insert(relations_.column(col));
        }
    }
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (!relation_space_.is_pivot(i)) standard_.push_back(i);
    }
}

std::optional<std::size_t> Presentation::index_of(const Monomial& m) const {
    const auto it = index_.find(m);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Vector Presentation::coordinates(const Vector& v) const {
    const Vector reduced = relation_space_.reduce(v);
    Vector out(standard_.size());
    for (std::size_t i = 0; i < standard_.size(); ++i) out[i] = reduced[standard_[i]];
    return out;
}

Vector Presentation::lift(const Vector& coordinates) const {
    Vector v(basis_.size());
    for (std::size_t i = 0; i < standard_.size(); ++i) v[standard_[i]] = coordinates.at(i);
    return v;
}

Matrix Presentation::quotient_matrix() const {
    Matrix q(dim(), basis_.size());
    for (std::size_t c = 0; c < basis_.size(); ++c) {
        Vector e(basis_.size());
        e[c] = 1;
        const Vector col = coordinates(e);
        for (std::size_t r = 0; r < col.size(); ++r) q(r, c) = col[r];
    }
    return q;
}

Matrix Presentation::section_matrix() const {
    Matrix s(basis_.size(), dim());
    for (std::size_t i = 0; i < standard_.size(); ++i) s(standard_[i], i) = 1;
    return s;
}

bool Presentation::same_module(const Presentation& other) const {
    return delta_ == other.delta_ && same_subcomplex(gamma_, other.gamma_) && realization_ == other.realization_;
}

Matrix multiplication_matrix(const Presentation& source, const Presentation& target, const LinearForm& ell) {
    Matrix m(target.basis().size(), source.basis().size());
    for (std::size_t j = 0; j < source.basis().size(); ++j) {
        for (std::size_t v = 0; v < ell.coefficients().size(); ++v) {
            const Rational& c = ell.coefficients()[v];
            if (sgn(c) == 0) continue;
            if (auto idx = target.index_of(source.basis()[j].times(static_cast<Vertex>(v)))) m(*idx, j) += c;
        }
    }
    return m;
}

Matrix monomial_multiplication_matrix(const Presentation& source, const Presentation& target, const Monomial& factor) {
    Matrix m(target.basis().size(), source.basis().size());
    for (std::size_t j = 0; j < source.basis().size(); ++j) {
        if (auto idx = target.index_of(source.basis()[j].times(factor))) m(*idx, j) = 1;
    }
    return m;
}

Matrix induced_matrix(const Presentation& source, const Presentation& target, const Matrix& monomial_level) {
    if (monomial_level.rows() != target.basis().size() || monomial_level.cols() != source.basis().size()) {
        throw Error(ErrorCode::ShapeMismatch, "monomial-level matrix does not match the presentations");
    }
    Matrix out(target.dim(), source.dim());
    const auto& standard = source.standard_monomials();
    for (std::size_t i = 0; i < standard.size(); ++i) {
        const Vector col = target.coordinates(monomial_level.column(standard[i]));
        for (std::size_t r = 0; r < col.size(); ++r) out(r, i) = col[r];
    }
    return out;
}

std::size_t induced_rank(const Presentation& target, const Matrix& monomial_level) {
    return rank(hconcat(target.relations(), monomial_level)) - rank(target.relations());
}

bool respects_relations(const Presentation& source, const Presentation& target, const Matrix& monomial_level) {
    for (std::size_t c = 0; c < source.relations().cols(); ++c) {
        if (!target.relation_space().contains(monomial_level * source.relations().column(c))) return false;
    }
    return true;
}

MultiplicationMap mult_map(const Presentation& pk, const Presentation& pk1, const LinearForm& ell) {
    require_consecutive(pk, pk1);
    const Matrix m = multiplication_matrix(pk, pk1, ell);
    MultiplicationMap out;
    out.rank = induced_rank(pk1, m);
    const Matrix kernel = kernel_basis(induced_matrix(pk, pk1, m));
    std::vector<Vector> lifted;
    for (std::size_t c = 0; c < kernel.cols(); ++c) lifted.push_back(pk.lift(kernel.column(c)));
    out.kernel = Matrix::from_columns(lifted, pk.basis().size());
    return out;
}

std::size_t dim_A(const SimplicialComplex& delta, const std::optional<SimplicialComplex>& gamma, const Realization& r,
                  int k) {
    return Presentation(delta, gamma, r, k).dim();
}

std::vector<std::size_t> hilbert_function(const SimplicialComplex& delta, const Realization& r) {
    const GradedModule module(delta, std::nullopt, r);
    std::vector<std::size_t> h;
    for (int k = 0; k <= module.top_degree(); ++k) h.push_back(module[k].dim());
    return h;
}

GradedModule::GradedModule(const SimplicialComplex& delta, const std::optional<SimplicialComplex>& gamma,
                           const Realization& r) {
    for (int k = 0; k <= r.dimension(); ++k) pieces_.emplace_back(delta, gamma, r, k);
}

std::size_t power_mult_rank(const GradedModule& module, const LinearForm& ell, int k) {
    const int d = module.top_degree();
    if (k < 0 || 2 * k > d) throw Error(ErrorCode::DegreeMismatch, "power map needs 0 <= k <= d/2");
    Matrix composed = Matrix::identity(module[k].dim());
    for (int j = k; j < d - k; ++j) {
        const Matrix step = induced_matrix(module[j], module[j + 1], multiplication_matrix(module[j], module[j + 1], ell));
        composed = step * composed;
    }
    return rank(composed);
}

std::size_t power_mult_rank(const SimplicialComplex& delta, const Realization& r, const LinearForm& ell, int k) {
    return power_mult_rank(GradedModule(delta, std::nullopt, r), ell, k);
}

RestrictionMap restriction_map(const Presentation& source, const Presentation& target) {
    if (!target.complex().is_subcomplex_of(source.complex())) {
        throw Error(ErrorCode::NotSubcomplex, "restriction target must be a subcomplex of the source");
    }
    if (source.degree() != target.degree() || !(source.realization() == target.realization())) {
        throw Error(ErrorCode::DegreeMismatch, "restriction needs equal degree and realization");
    }
    RestrictionMap out;
    out.matrix = Matrix(target.basis().size(), source.basis().size());
    for (std::size_t j = 0; j < source.basis().size(); ++j) {
        if (auto idx = target.index_of(source.basis()[j])) out.matrix(*idx, j) = 1;
    }
    out.surjective = rank(induced_matrix(source, target, out.matrix)) == target.dim();
    return out;
}

Matrix pairing_matrix(const GradedModule& module, int k) {
    const int d = module.top_degree();
    const Presentation& top = module[d];
    if (top.dim() != 1) {
        throw Error(ErrorCode::TopDegreeNotOneDimensional,
                    "dim A^" + std::to_string(d) + " = " + std::to_string(top.dim()));
    }
    if (k < 0 || k > d) throw Error(ErrorCode::DegreeMismatch, "pairing degree out of range");
    const Presentation& left = module[k];
    const Presentation& right = module[d - k];
    Matrix out(left.dim(), right.dim());
    for (std::size_t i = 0; i < left.dim(); ++i) {
        const Monomial& a = left.basis()[left.standard_monomials()[i]];
        for (std::size_t j = 0; j < right.dim(); ++j) {
            const Monomial& b = right.basis()[right.standard_monomials()[j]];
            if (auto idx = top.index_of(a.times(b))) {
                Vector e(top.basis().size());
                e[*idx] = 1;
                out(i, j) = top.coordinates(e)[0];
            }
        }
    }
    return out;
}

Matrix pairing_matrix(const SimplicialComplex& delta, const Realization& r, int k) {
    return pairing_matrix(GradedModule(delta, std::nullopt, r), k);
}

StarLinkIso verify_star_link_iso(const SimplicialComplex& delta, const Realization& r, Vertex v, int k) {
    const Face vertex{v};
    const SimplicialComplex st = star(delta, vertex);
    const SimplicialComplex lk = link(delta, vertex);
    const Presentation link_piece(lk, std::nullopt, project_link(r, vertex), k);
    const Presentation star_piece(st, std::nullopt, r, k);
    const Presentation relative(st, deletion(st, vertex), r, k + 1);
    const Matrix times_v = monomial_multiplication_matrix(star_piece, relative, Monomial({v}));

    StarLinkIso out;
    out.dim_link = link_piece.dim();
    out.dim_star = star_piece.dim();
    out.dim_relative_star = relative.dim();
    out.rank = induced_rank(relative, times_v);
    out.holds = out.dim_link == out.dim_star && out.rank == out.dim_star && out.rank == out.dim_relative_star;
    return out;
}

}  // namespace blueprint
