#include "sampling/process.hpp"

#include <cstdio>
#include <map>
#include <sstream>

namespace iterlab {

namespace {

void check_hurst(double h) { Hurst probe(h); (void)probe; }

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

}  // namespace

void ProcessModel::validate() const {
    for (double h : hursts) check_hurst(h);
    if (scale_power < 0) throw DomainError("ProcessModel: K must be >= 0");
    if (n < 1) throw DomainError("ProcessModel: n must be >= 1");
    switch (tag) {
        case ProcessTag::FBm:
        case ProcessTag::CauchyOfFBm:
        case ProcessTag::ScaledIterated:
        case ProcessTag::WeightedJ:
        case ProcessTag::ProductFBm:
            if (hursts.size() != 1) throw DomainError("ProcessModel: tag requires exactly one Hurst parameter");
            break;
        case ProcessTag::IteratedFBm:
            if (hursts.size() != 2) throw DomainError("ProcessModel: IteratedFBm requires two Hurst parameters");
            break;
        case ProcessTag::IteratedFBmChain:
            if (hursts.size() < 2) throw DomainError("ProcessModel: chain length must be >= 2");
            break;
        default:
            if (!hursts.empty()) throw DomainError("ProcessModel: tag takes no Hurst parameters");
            break;
    }
}

std::string ProcessModel::name() const {
    std::ostringstream os;
    switch (tag) {
        case ProcessTag::FBm: os << "fbm:H=" << fmt(hursts[0]); break;
        case ProcessTag::IteratedFBm: os << "itfbm:H1=" << fmt(hursts[0]) << ",H2=" << fmt(hursts[1]); break;
        case ProcessTag::IteratedFBmChain: {
            os << "chain:";
            for (std::size_t i = 0; i < hursts.size(); ++i)
                os << (i ? "," : "") << "H" << (i + 1) << "=" << fmt(hursts[i]);
            break;
        }
        case ProcessTag::WeightedJ: os << "j:n=" << n << ",H=" << fmt(hursts[0]); break;
        case ProcessTag::ScaledIterated: os << "scaled:K=" << fmt(scale_power) << ",H=" << fmt(hursts[0]); break;
        case ProcessTag::ProductFBm: os << "prodfbm:n=" << n << ",H=" << fmt(hursts[0]); break;
        case ProcessTag::Cauchy: os << "cauchy"; break;
        case ProcessTag::CauchyOfFBm: os << "cbm:H=" << fmt(hursts[0]); break;
        case ProcessTag::BmOfCauchy: os << "bc"; break;
        case ProcessTag::CauchyOfCauchy: os << "cc"; break;
        case ProcessTag::HalfProductCauchy: os << "halfprod"; break;
        case ProcessTag::ReciprocalCC: os << "recipcc"; break;
    }
    return os.str();
}

ProcessModel ProcessModel::parse(const std::string& spec) {
    std::string name = spec;
    std::map<std::string, double> kv;
    const auto colon = spec.find(':');
    if (colon != std::string::npos) {
        name = spec.substr(0, colon);
        std::string rest = spec.substr(colon + 1);
        std::istringstream is(rest);
        std::string item;
        while (std::getline(is, item, ',')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos) throw DomainError("model spec: expected key=val in '" + item + "'");
            try {
                kv[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
            } catch (const std::exception&) {
                throw DomainError("model spec: bad numeric value in '" + item + "'");
            }
        }
    }
    auto get = [&](const std::string& key, double dflt, bool required = false) {
        auto it = kv.find(key);
        if (it == kv.end()) {
            if (required) throw DomainError("model spec: missing key '" + key + "' for " + name);
            return dflt;
        }
        return it->second;
    };

    ProcessModel m;
    if (name == "fbm") {
        m = fbm(get("H", 0.5));
    } else if (name == "itfbm") {
        m = iterated_fbm(get("H1", 0.5), get("H2", 0.5));
    } else if (name == "chain") {
        std::vector<double> hs;
        for (int i = 1;; ++i) {
            auto it = kv.find("H" + std::to_string(i));
            if (it == kv.end()) break;
            hs.push_back(it->second);
        }
        if (hs.size() < 2) throw DomainError("model spec: chain needs H1,H2,... (at least two)");
        m = chain(hs);
    } else if (name == "j") {
        m = weighted_j(static_cast<int>(get("n", 1)), get("H", 0.5, true));
    } else if (name == "scaled") {
        m = scaled_iterated(get("K", 0.0), get("H", 0.5, true));
    } else if (name == "prodfbm") {
        m = product_fbm(static_cast<int>(get("n", 2)), get("H", 0.5, true));
    } else if (name == "cauchy") {
        m = cauchy();
    } else if (name == "cbm") {
        m = cauchy_of_fbm(get("H", 0.5, true));
    } else if (name == "bc") {
        m = bm_of_cauchy();
    } else if (name == "cc") {
        m = cauchy_of_cauchy();
    } else if (name == "halfprod") {
        m = half_product_cauchy();
    } else if (name == "recipcc") {
        m = reciprocal_cc();
    } else {
        throw DomainError("model spec: unknown model name '" + name + "'");
    }
    m.validate();
    return m;
}

}  // namespace iterlab
