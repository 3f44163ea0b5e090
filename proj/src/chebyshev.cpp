#include "flowlab/chebyshev.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace flowlab {

double det_dense(std::vector<double> a, int n) {
    double det = 1.0;
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(a[r * n + c]) > std::abs(a[piv * n + c])) piv = r;
        if (a[piv * n + c] == 0.0) return 0.0;
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(a[c * n + j], a[piv * n + j]);
            det = -det;
        }
        det *= a[c * n + c];
        for (int r = c + 1; r < n; ++r) {
            double f = a[r * n + c] / a[c * n + c];
            for (int j = c; j < n; ++j) a[r * n + j] -= f * a[c * n + j];
        }
    }
    return det;
}

void solve_dense(std::vector<double> a, std::vector<double>& b, int n) {
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(a[r * n + c]) > std::abs(a[piv * n + c])) piv = r;
        if (a[piv * n + c] == 0.0) throw std::runtime_error("singular system in solve_dense");
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(a[c * n + j], a[piv * n + j]);
            std::swap(b[c], b[piv]);
        }
        for (int r = c + 1; r < n; ++r) {
            double f = a[r * n + c] / a[c * n + c];
            for (int j = c; j < n; ++j) a[r * n + j] -= f * a[c * n + j];
            b[r] -= f * b[c];
        }
    }
    for (int r = n - 1; r >= 0; --r) {
        double acc = b[r];
        for (int j = r + 1; j < n; ++j) acc -= a[r * n + j] * b[j];
        b[r] = acc / a[r * n + r];
    }
}

namespace {

// antiderivative matrix on [-1,1] for Lobatto nodes t_i = -cos(i pi / n):
// out = S v gives values of int_{-1}^{t_i} of the interpolant
std::vector<double> build_antiderivative(int n) {
    const int m = n + 1;
    std::vector<double> t(m);
    for (int i = 0; i < m; ++i) t[i] = -std::cos(M_PI * i / n);

    // Chebyshev Vandermonde V[i][k] = T_k(t_i)
    std::vector<double> vmat(m * m);
    for (int i = 0; i < m; ++i) {
        double prev = 1.0, cur = t[i];
        vmat[i * m + 0] = 1.0;
        if (m > 1) vmat[i * m + 1] = t[i];
        for (int k = 2; k < m; ++k) {
            double next = 2 * t[i] * cur - prev;
            vmat[i * m + k] = next;
            prev = cur;
            cur = next;
        }
    }

    std::vector<double> s(m * m, 0.0);
    // column j: antiderivative of the cardinal interpolant through e_j
    for (int j = 0; j < m; ++j) {
        std::vector<double> coef(m, 0.0);
        coef[j] = 1.0;
        std::vector<double> a = coef;
        solve_dense(vmat, a, m);  // Chebyshev coefficients of the cardinal poly

        // integrate: B has degree m, coefficients b_0..b_m
        std::vector<double> b(m + 1, 0.0);
        // int T_0 = T_1, int T_1 = (T_2 + T_0)/4, int T_k = T_{k+1}/(2(k+1)) - T_{k-1}/(2(k-1))
        b[1] += a[0];
        if (m >= 2) {
            b[2] += a[1] / 4;
            b[0] += a[1] / 4;
        }
        for (int k = 2; k < m; ++k) {
            b[k + 1] += a[k] / (2.0 * (k + 1));
            b[k - 1] -= a[k] / (2.0 * (k - 1));
        }
        // evaluate B at nodes, subtract B(-1)
        auto eval_cheb = [&](double x) {
            double acc = b[0];
            double prev = 1.0, cur = x;
            if (m >= 1) acc += b[1] * x;
            for (int k = 2; k <= m; ++k) {
                double next = 2 * x * cur - prev;
                acc += b[k] * next;
                prev = cur;
                cur = next;
            }
            return acc;
        };
        const double at_start = eval_cheb(-1.0);
        for (int i = 0; i < m; ++i) s[i * m + j] = eval_cheb(t[i]) - at_start;
    }
    return s;
}

std::mutex cache_mutex;
std::map<int, std::vector<double>> antider_cache;

const std::vector<double>& cached_antiderivative(int n) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = antider_cache.find(n);
    if (it != antider_cache.end()) return it->second;
    return antider_cache.emplace(n, build_antiderivative(n)).first->second;
}

} // namespace

ChebyshevWindow::ChebyshevWindow(double a, double b, int n) : a_(a), b_(b), n_(n) {
    if (!(b > a)) throw std::invalid_argument("chebyshev window: b > a required");
    if (n < 2) throw std::invalid_argument("chebyshev window: n >= 2 required");
    nodes_.resize(n + 1);
    bary_.resize(n + 1);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i <= n; ++i) {
        nodes_[i] = mid - half * std::cos(M_PI * i / n);
        bary_[i] = (i % 2 == 0 ? 1.0 : -1.0);
        if (i == 0 || i == n) bary_[i] *= 0.5;
    }
    antider_ = cached_antiderivative(n);
}

void ChebyshevWindow::integrate_values(std::span<const double> v, std::span<double> out) const {
    const int m = n_ + 1;
    if (static_cast<int>(v.size()) != m || static_cast<int>(out.size()) != m)
        throw std::invalid_argument("integrate_values: length mismatch");
    const double half = 0.5 * (b_ - a_);
    for (int i = 0; i < m; ++i) {
        double acc = 0.0;
        for (int j = 0; j < m; ++j) acc += antider_[i * m + j] * v[j];
        out[i] = half * acc;
    }
}

double ChebyshevWindow::interpolate(std::span<const double> v, double t) const {
    const int m = n_ + 1;
    if (static_cast<int>(v.size()) != m)
        throw std::invalid_argument("interpolate: length mismatch");
    double num = 0.0, den = 0.0;
    for (int i = 0; i < m; ++i) {
        double diff = t - nodes_[i];
        if (diff == 0.0) return v[i];
        double w = bary_[i] / diff;
        num += w * v[i];
        den += w;
    }
    return num / den;
}

} // namespace flowlab
