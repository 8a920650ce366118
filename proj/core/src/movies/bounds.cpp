#include "tilepump/movies/bounds.hpp"

#include "tilepump/model/errors.hpp"

namespace tilepump {

namespace {

std::uint64_t param(const std::map<std::string, std::uint64_t>& params, const std::string& bound_name,
                    const std::string& key)
{
    auto it = params.find(key);
    if (it == params.end())
        throw Error(ErrorCode::UnknownBound, bound_name + " needs parameter " + key);
    if (it->second == 0)
        throw Error(ErrorCode::PreconditionFailed, bound_name + ": parameter " + key + " must be positive");
    return it->second;
}

std::uint64_t small(const BigInt& x, const char* what)
{
    if (x > kBoundArgumentLimit)
        throw Error(ErrorCode::BoundTooLarge, std::string(what) + " is too large to evaluate");
    return x.convert_to<std::uint64_t>();
}

BigInt power(const BigInt& base, const BigInt& exponent)
{
    return boost::multiprecision::pow(base, static_cast<unsigned>(small(exponent, "exponent")));
}

BigInt factorial(const BigInt& n)
{
    const std::uint64_t m = small(n, "factorial argument");
    BigInt r = 1;
    for (std::uint64_t k = 2; k <= m; ++k)
        r *= k;
    return r;
}

}  // namespace

std::vector<std::string> bound_names()
{
    return {"f_b", "B_seed", "B_d", "B_d_small", "B_s", "N_cagefree"};
}

BoundReport bound(const std::string& name, const std::map<std::string, std::uint64_t>& params)
{
    BoundReport r;
    r.name = name;
    auto get = [&](const char* key) {
        const std::uint64_t v = param(params, name, key);
        r.params[key] = v;
        return BigInt(v);
    };
    if (name == "f_b") {
        const BigInt t = get("T");
        const BigInt n = get("n");
        r.formula = "((|T|+1)^n)! + 1";
        r.value = factorial(power(t + 1, n)) + 1;
    } else if (name == "B_seed") {
        const BigInt t = get("T");
        const BigInt s = get("sigma");
        r.formula = "2|T| + |sigma|";
        r.value = 2 * t + s;
    } else if (name == "B_d") {
        const BigInt t = get("T");
        const BigInt s = get("sigma");
        r.formula = "|sigma| + (3|T| + |sigma| + 5)|T| + 1";
        r.value = s + (3 * t + s + 5) * t + 1;
    } else if (name == "B_d_small") {
        const BigInt t = get("T");
        r.formula = "2|T| + 2";
        r.value = 2 * t + 2;
    } else if (name == "B_s") {
        const BigInt t = get("T");
        const BigInt w = get("w");
        const BigInt h = get("h");
        r.formula = "(2|T|)^(w+h)";
        r.value = power(2 * t, w + h);
    } else if (name == "N_cagefree") {
        const BigInt t = get("T");
        const BigInt n = get("n");
        const BigInt v1 = get("v1");
        r.formula = "n + |v|_1 * ((|T|^(|v|_1^2))! + 1)";
        r.value = n + v1 * (factorial(power(t, v1 * v1)) + 1);
    } else {
        throw Error(ErrorCode::UnknownBound, "unknown bound " + name);
    }
    return r;
}

std::vector<BoundReport> bounds_for(std::uint64_t tiles, std::uint64_t seed_size)
{
    std::vector<BoundReport> out;
    out.push_back(bound("B_seed", {{"T", tiles}, {"sigma", seed_size}}));
    out.push_back(bound("B_d", {{"T", tiles}, {"sigma", seed_size}}));
    out.push_back(bound("B_d_small", {{"T", tiles}}));
    try {
        out.push_back(bound("f_b", {{"T", tiles}, {"n", out.back().value.convert_to<std::uint64_t>()}}));
    } catch (const Error& e) {
        if (e.code() != ErrorCode::BoundTooLarge)
            throw;
    }
    return out;
}

}  // namespace tilepump
