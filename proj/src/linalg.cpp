#include "cdp/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace cdp {

// Cyclic Jacobi for symmetric matrices. d stays small here (ambient point
// dimension), so the O(d^3) sweeps are cheap and converge quadratically.
SymmetricEigen symmetric_eigen(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix must be square");
    const Eigen::Index n = m.rows();
    Eigen::MatrixXd a = (m + m.transpose()) / 2.0;   // exact for symmetric input
    Eigen::MatrixXd z = Eigen::MatrixXd::Identity(n, n);

    const double norm = a.norm();
    const double tol = 1e-15 * (norm > 0.0 ? norm : 1.0);
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (Eigen::Index p = 0; p < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
        }
        if (std::sqrt(2.0 * off) <= tol) break;

        for (Eigen::Index p = 0; p < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                for (Eigen::Index r = 0; r < n; ++r) {
                    const double arp = a(r, p);
                    const double arq = a(r, q);
                    a(r, p) = c * arp - s * arq;
                    a(r, q) = s * arp + c * arq;
                }
                for (Eigen::Index r = 0; r < n; ++r) {
                    const double apr = a(p, r);
                    const double aqr = a(q, r);
                    a(p, r) = c * apr - s * aqr;
                    a(q, r) = s * apr + c * aqr;
                }
                for (Eigen::Index r = 0; r < n; ++r) {
                    const double zrp = z(r, p);
                    const double zrq = z(r, q);
                    z(r, p) = c * zrp - s * zrq;
                    z(r, q) = s * zrp + c * zrq;
                }
            }
        }
    }

    std::vector<Eigen::Index> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index x, Eigen::Index y) { return a(x, x) > a(y, y); });

    SymmetricEigen out;
    out.values.resize(n);
    out.vectors.resize(n, n);
    for (Eigen::Index c = 0; c < n; ++c) {
        out.values[c] = a(order[c], order[c]);
        out.vectors.col(c) = z.col(order[c]);
        // Sign convention: entry of largest absolute value positive,
        // earliest index on ties.
        Eigen::Index arg = 0;
        double best = -1.0;
        for (Eigen::Index r = 0; r < n; ++r) {
            const double v = std::abs(out.vectors(r, c));
            if (v > best) {
                best = v;
                arg = r;
            }
        }
        if (out.vectors(arg, c) < 0.0) out.vectors.col(c) = -out.vectors.col(c);
    }
    return out;
}

} // namespace cdp
