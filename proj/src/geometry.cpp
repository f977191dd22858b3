#include "aurora/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <tuple>

#include "aurora/errors.hpp"

namespace aurora {

namespace {
constexpr double kPi = std::numbers::pi;
}

void Domain::validate() const {
    if (!(Lx > 0.0) || !(Ly > 0.0))
        throw DomainError("Domain: side lengths must be positive");
    if (nx < 8 || ny < 8)
        throw DomainError("Domain: resolution must be at least 8 per direction");
}

SineBasis::SineBasis(const Domain& dom, std::vector<SineMode> modes)
    : dom_(dom), modes_(std::move(modes)) {}

double SineBasis::normalization() const {
    return 2.0 / std::sqrt(dom_.Lx * dom_.Ly);
}

double SineBasis::eval(int j, double x, double y) const {
    const SineMode& m = modes_[j];
    return normalization() * std::sin(m.k * kPi * x / dom_.Lx) * std::sin(m.l * kPi * y / dom_.Ly);
}

double SineBasis::eval_dx(int j, double x, double y) const {
    const SineMode& m = modes_[j];
    double kx = m.k * kPi / dom_.Lx;
    return normalization() * kx * std::cos(kx * x) * std::sin(m.l * kPi * y / dom_.Ly);
}

double SineBasis::eval_dy(int j, double x, double y) const {
    const SineMode& m = modes_[j];
    double ly = m.l * kPi / dom_.Ly;
    return normalization() * ly * std::sin(m.k * kPi * x / dom_.Lx) * std::cos(ly * y);
}

void SineBasis::build_tables() const {
    if (!val_.empty()) return;
    const int n = size();
    val_.resize(n);
    dx_.resize(n);
    dy_.resize(n);
    for (int j = 0; j < n; ++j) {
        val_[j].resize(dom_.size());
        dx_[j].resize(dom_.size());
        dy_[j].resize(dom_.size());
        for (int jj = 0; jj < dom_.ny; ++jj) {
            for (int ii = 0; ii < dom_.nx; ++ii) {
                std::size_t id = dom_.idx(ii, jj);
                double x = dom_.x(ii), y = dom_.y(jj);
                val_[j][id] = eval(j, x, y);
                dx_[j][id] = eval_dx(j, x, y);
                dy_[j][id] = eval_dy(j, x, y);
            }
        }
    }
}

const std::vector<double>& SineBasis::node_values(int j) const {
    build_tables();
    return val_[j];
}
const std::vector<double>& SineBasis::node_dx(int j) const {
    build_tables();
    return dx_[j];
}
const std::vector<double>& SineBasis::node_dy(int j) const {
    build_tables();
    return dy_[j];
}

std::string SineBasis::summary_csv() const {
    std::ostringstream os;
    os.precision(17);
    os << "j,k,l,eigenvalue,grad_sup\n";
    for (int j = 0; j < size(); ++j) {
        const SineMode& m = modes_[j];
        os << j + 1 << "," << m.k << "," << m.l << "," << m.eigenvalue << "," << m.grad_sup << "\n";
    }
    return os.str();
}

double GalerkinState::l2_norm() const {
    double s = 0.0;
    for (const auto& c : coeffs)
        s += c[0] * c[0] + c[1] * c[1] + c[2] * c[2];
    return std::sqrt(s);
}

namespace {

// Sup of |grad eta_{k,l}| over the closed rectangle: sampled on a refined
// grid, then combined with the analytic edge extrema A*k*pi/Lx and
// A*l*pi/Ly (the sup of a sine-product gradient sits on the boundary).
double mode_grad_sup(const Domain& dom, int k, int l, int refine) {
    const double A = 2.0 / std::sqrt(dom.Lx * dom.Ly);
    const double kx = k * kPi / dom.Lx;
    const double ly = l * kPi / dom.Ly;
    double best = A * std::max(kx, ly);
    const int rx = dom.nx * refine, ry = dom.ny * refine;
    const double hx = dom.Lx / rx, hy = dom.Ly / ry;
    for (int j = 0; j <= ry; ++j) {
        double y = std::min(j * hy, dom.Ly);
        double sy = std::sin(ly * y), cy = std::cos(ly * y);
        for (int i = 0; i <= rx; ++i) {
            double x = std::min(i * hx, dom.Lx);
            double gx = kx * std::cos(kx * x) * sy;
            double gy = ly * std::sin(kx * x) * cy;
            best = std::max(best, A * std::hypot(gx, gy));
        }
    }
    return best;
}

} // namespace

SineBasis build_basis(const Domain& dom, int n) {
    dom.validate();
    const long capacity = static_cast<long>(dom.nx - 1) * (dom.ny - 1);
    if (n < 1)
        throw CapacityError("build_basis: n must be at least 1");
    if (n > capacity)
        throw CapacityError("build_basis: requested " + std::to_string(n) +
                            " modes, grid capacity is " + std::to_string(capacity));

    std::vector<SineMode> all;
    all.reserve(capacity);
    for (int k = 1; k <= dom.nx - 1; ++k) {
        for (int l = 1; l <= dom.ny - 1; ++l) {
            SineMode m;
            m.k = k;
            m.l = l;
            m.eigenvalue = kPi * kPi * (double(k) * k / (dom.Lx * dom.Lx) + double(l) * l / (dom.Ly * dom.Ly));
            all.push_back(m);
        }
    }
    std::sort(all.begin(), all.end(), [](const SineMode& a, const SineMode& b) {
        return std::tie(a.eigenvalue, a.k, a.l) < std::tie(b.eigenvalue, b.k, b.l);
    });
    all.resize(n);
    for (auto& m : all) m.grad_sup = mode_grad_sup(dom, m.k, m.l, 4);
    return SineBasis(dom, std::move(all));
}

double grad_sup_constant(const SineBasis& basis, int N, int refine) {
    if (N < 1)
        throw CapacityError("grad_sup_constant: N must be at least 1");
    if (N > basis.size())
        throw CapacityError("grad_sup_constant: N exceeds basis size");
    double best = 0.0;
    for (int j = 0; j < N; ++j) {
        double g = refine == 4 ? basis.mode(j).grad_sup
                               : mode_grad_sup(basis.domain(), basis.mode(j).k, basis.mode(j).l, refine);
        best = std::max(best, g);
    }
    return N * best;
}

} // namespace aurora
