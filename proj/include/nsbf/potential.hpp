#pragma once

#include <cmath>
#include <string>

#include <boost/math/constants/constants.hpp>

#include "nsbf/mesh.hpp"
#include "nsbf/quadrature.hpp"

namespace nsbf {

// Analytic potentials available by name.
//   zero, const:C, x^2, sqrt(pi^2-x^2), 1/x,
//   step-power:K    (K = 4..6)  q = 0 on [0,pi/2], (x-pi/2)^(K-4) beyond
//   one-plus-power:K (K = 0..5) q = 1 on [0,pi/2], 1+(x-pi/2)^K beyond
struct PotentialSpec {
    enum class Kind { Zero, Constant, Square, Semicircle, Coulomb, StepPower, OnePlusPower };

    Kind kind = Kind::Zero;
    double param = 0.0;

    static PotentialSpec parse(const std::string& name);
    std::string name() const;

    bool singular_origin() const { return kind == Kind::Coulomb; }

    // x*q(x); finite at the origin for every built-in.
    template <typename Scalar>
    Scalar xq(Scalar x) const
    {
        using std::pow;
        using std::sqrt;
        const Scalar half_pi = boost::math::constants::half_pi<Scalar>();
        switch (kind) {
        case Kind::Zero: return Scalar(0);
        case Kind::Constant: return Scalar(param) * x;
        case Kind::Square: return x * x * x;
        case Kind::Semicircle: {
            const Scalar pi = boost::math::constants::pi<Scalar>();
            return x * sqrt((pi - x) * (pi + x));
        }
        case Kind::Coulomb: return Scalar(1);
        case Kind::StepPower:
            if (x <= half_pi) return Scalar(0);
            return x * pow(x - half_pi, static_cast<int>(param) - 4);
        case Kind::OnePlusPower:
            if (x <= half_pi) return x;
            return x * (1 + pow(x - half_pi, static_cast<int>(param)));
        }
        return Scalar(0);
    }

    // q(x) for x > 0; at x = 0 the finite limit, or 0 for a singular origin.
    template <typename Scalar>
    Scalar q(Scalar x) const
    {
        if (x == 0) {
            switch (kind) {
            case Kind::Constant: return Scalar(param);
            case Kind::Semicircle: return boost::math::constants::pi<Scalar>();
            case Kind::OnePlusPower: return Scalar(1);
            default: return Scalar(0);
            }
        }
        return xq(x) / x;
    }

    bool operator==(const PotentialSpec& o) const { return kind == o.kind && param == o.param; }
};

// Potential sampled on a mesh together with l and Q = int_0^x q.
template <typename Scalar = double>
struct Potential {
    UniformMesh mesh;
    Scalar l;
    GridFunction<Scalar> q;    // sample at 0 is a finite stand-in when singular_origin
    GridFunction<Scalar> xq;   // x*q, finite everywhere
    GridFunction<Scalar> Q;
    bool singular_origin = false;

    Potential(const UniformMesh& mesh_, Scalar l_, Vec<Scalar> xq_samples, Vec<Scalar> q_samples, bool singular)
        : mesh(mesh_), l(l_), q(mesh_, std::move(q_samples)), xq(mesh_, std::move(xq_samples)),
          Q(mesh_, cumulative_integral_guarded(q.values(), mesh_.template step<Scalar>())), singular_origin(singular)
    {
        if (l < Scalar(-0.5)) throw DomainError("l must be >= -1/2");
    }

    static Potential from_spec(const PotentialSpec& spec, const UniformMesh& mesh, Scalar l)
    {
        using std::isfinite;
        const Vec<Scalar> x = mesh.template points<Scalar>();
        Vec<Scalar> xqv(x.size()), qv(x.size());
        for (std::ptrdiff_t i = 0; i < x.size(); ++i) {
            xqv[i] = spec.xq(x[i]);
            qv[i] = spec.q(x[i]);
            if (!isfinite(xqv[i]) || !isfinite(qv[i]))
                throw DomainError("potential " + spec.name() + " is not finite at x = " +
                                  std::to_string(mesh.x(i)));
        }
        return Potential(mesh, l, std::move(xqv), std::move(qv), spec.singular_origin());
    }

    // Samples q_i on the mesh; a non-finite q_0 marks a singular origin and x*q at 0
    // is then extrapolated from the next five samples.
    static Potential from_samples(const UniformMesh& mesh, Scalar l, const Vec<Scalar>& samples)
    {
        using std::isfinite;
        if (samples.size() != mesh.m()) throw InvalidMesh("potential sample count does not match mesh");
        const Vec<Scalar> x = mesh.template points<Scalar>();
        Vec<Scalar> xqv = x * samples, qv = samples;
        for (std::ptrdiff_t i = 1; i < x.size(); ++i)
            if (!isfinite(samples[i]))
                throw DomainError("potential sample is not finite at x = " + std::to_string(mesh.x(i)));
        const bool singular = !isfinite(samples[0]);
        if (singular) {
            // quartic through x_1..x_5, evaluated at 0
            xqv[0] = 5 * xqv[1] - 10 * xqv[2] + 10 * xqv[3] - 5 * xqv[4] + xqv[5];
            qv[0] = Scalar(0);
        }
        return Potential(mesh, l, std::move(xqv), std::move(qv), singular);
    }
};

}  // namespace nsbf
