#pragma once

// Parameter bundle identifying which regime a question lives in:
//   UnionL(l)       unions of two distinct members pairwise l-intersect
//   ST(s,t)         union of any s members meets union of any t others
//   Uniform(k,s,t)  the ST question restricted to the k-uniform layer
//
// The non-uniform regimes require n >= 3; below that the statements are not
// defined, so those parameters are rejected rather than guessed at.
// (s,t) is normalized to s <= t on construction; the two roles are symmetric.

#include <string>

#include "uif/errors.hpp"
#include "uif/family.hpp"

namespace uif {

enum class Regime { UnionL, ST, Uniform };

class ProblemSpec {
  public:
    static ProblemSpec union_l(int n, int l) {
        require(n >= 3, "union-l regime requires n >= 3");
        Family::check_n(n);
        require(l >= 1, "l must be positive");
        ProblemSpec p;
        p.regime_ = Regime::UnionL;
        p.n_ = n;
        p.l_ = l;
        return p;
    }

    static ProblemSpec st(int n, int s, int t) {
        require(n >= 3, "(s,t) regime requires n >= 3");
        Family::check_n(n);
        require(s >= 1 && t >= 1, "s and t must be positive");
        ProblemSpec p;
        p.regime_ = Regime::ST;
        p.n_ = n;
        p.s_ = std::min(s, t);
        p.t_ = std::max(s, t);
        return p;
    }

    static ProblemSpec uniform(int n, int k, int s, int t) {
        Family::check_n(n);
        require(k >= 1 && k <= n, "uniform regime requires 1 <= k <= n");
        require(s >= 1 && t >= 1, "s and t must be positive");
        ProblemSpec p;
        p.regime_ = Regime::Uniform;
        p.n_ = n;
        p.k_ = k;
        p.s_ = std::min(s, t);
        p.t_ = std::max(s, t);
        return p;
    }

    Regime regime() const { return regime_; }
    int n() const { return n_; }
    int l() const { return l_; }
    int s() const { return s_; }
    int t() const { return t_; }
    int k() const { return k_; }

    std::string describe() const {
        switch (regime_) {
            case Regime::UnionL:
                return "union-" + std::to_string(l_) + "-intersecting, n=" + std::to_string(n_);
            case Regime::ST:
                return "(" + std::to_string(s_) + "," + std::to_string(t_) +
                       ")-union-intersecting, n=" + std::to_string(n_);
            case Regime::Uniform:
                return std::to_string(k_) + "-uniform (" + std::to_string(s_) + "," +
                       std::to_string(t_) + ")-union-intersecting, n=" + std::to_string(n_);
        }
        return {};
    }

  private:
    static void require(bool ok, const char* msg) {
        if (!ok) throw ParamOutOfRange(msg);
    }

    Regime regime_ = Regime::UnionL;
    int n_ = 0;
    int l_ = 0;
    int s_ = 0;
    int t_ = 0;
    int k_ = 0;
};

}  // namespace uif
