#include "nsbf/potential.hpp"

#include <charconv>
#include <cmath>

namespace nsbf {

namespace {

int integer_param(const std::string& text, const std::string& name, int lo, int hi)
{
    int v = 0;
    const auto r = std::from_chars(text.data(), text.data() + text.size(), v);
    if (r.ec != std::errc() || r.ptr != text.data() + text.size() || v < lo || v > hi)
        throw ConfigError("potential " + name + " needs an integer parameter in [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "], got '" + text + "'");
    return v;
}

}  // namespace

PotentialSpec PotentialSpec::parse(const std::string& name)
{
    using K = Kind;
    if (name == "zero") return {K::Zero, 0.0};
    if (name == "x^2") return {K::Square, 0.0};
    if (name == "sqrt(pi^2-x^2)") return {K::Semicircle, 0.0};
    if (name == "1/x") return {K::Coulomb, 0.0};
    const auto colon = name.find(':');
    if (colon != std::string::npos) {
        const std::string head = name.substr(0, colon), arg = name.substr(colon + 1);
        if (head == "const") {
            double c = 0.0;
            const auto r = std::from_chars(arg.data(), arg.data() + arg.size(), c);
            if (r.ec != std::errc() || r.ptr != arg.data() + arg.size() || !std::isfinite(c))
                throw ConfigError("potential const needs a finite number, got '" + arg + "'");
            return {K::Constant, c};
        }
        if (head == "step-power") return {K::StepPower, double(integer_param(arg, head, 4, 6))};
        if (head == "one-plus-power") return {K::OnePlusPower, double(integer_param(arg, head, 0, 5))};
    }
    throw ConfigError("unknown potential '" + name +
                      "' (known: zero, const:C, x^2, sqrt(pi^2-x^2), 1/x, step-power:K, one-plus-power:K)");
}

std::string PotentialSpec::name() const
{
    switch (kind) {
    case Kind::Zero: return "zero";
    case Kind::Constant: {
        char buf[64];
        const auto r = std::to_chars(buf, buf + sizeof buf, param);
        return "const:" + std::string(buf, r.ptr);
    }
    case Kind::Square: return "x^2";
    case Kind::Semicircle: return "sqrt(pi^2-x^2)";
    case Kind::Coulomb: return "1/x";
    case Kind::StepPower: return "step-power:" + std::to_string(int(param));
    case Kind::OnePlusPower: return "one-plus-power:" + std::to_string(int(param));
    }
    return "zero";
}

}  // namespace nsbf
