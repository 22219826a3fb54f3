#include "neutro/norms.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace neutro {

namespace {

// The Frank closed form loses all accuracy near its limit members: at s = 1e-6
// it still sits ~ln2/|ln s| away from min, and near s = 1 the s^x - 1 terms
// cancel. Inside these windows the limit member is the better evaluation.
constexpr double kFrankProductWindow = 1e-4;
constexpr double kFrankGodelCutoff = 1e-6;
constexpr double kFrankLukasiewiczCutoff = 1e6;

double frank_closed_form(double s, double x, double y) {
  const double log_s = std::log(s);
  const double num = std::expm1(x * log_s) * std::expm1(y * log_s);
  return std::log1p(num / std::expm1(log_s)) / log_s;
}

}  // namespace

TNormFamily TNormFamily::frank(double s) {
  if (!(s > 0.0)) throw InvalidParameter("frank parameter must be positive");
  if (s == 1.0) throw InvalidParameter("frank parameter 1 is the product member; use product");
  return {TNormKind::Frank, s};
}

TNormFamily TNormFamily::parse(std::string_view spec) {
  std::string lowered(spec);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lowered == "godel") return godel();
  if (lowered == "product") return product();
  if (lowered == "lukasiewicz") return lukasiewicz();
  constexpr std::string_view prefix = "frank:";
  if (lowered.rfind(prefix, 0) == 0) {
    const std::string_view digits = std::string_view(lowered).substr(prefix.size());
    double s = 0.0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), s);
    if (ec != std::errc{} || ptr != digits.data() + digits.size())
      throw InvalidParameter("cannot parse frank parameter in '" + std::string(spec) + "'");
    return frank(s);
  }
  throw InvalidParameter("unknown t-norm family '" + std::string(spec) +
                         "' (expected godel | product | lukasiewicz | frank:<s>)");
}

double TNormFamily::tnorm(double x, double y) const {
  switch (kind_) {
    case TNormKind::Godel:
      return std::min(x, y);
    case TNormKind::Product:
      return x * y;
    case TNormKind::Lukasiewicz:
      return std::max(x + y - 1.0, 0.0);
    case TNormKind::Frank:
      if (std::fabs(frank_s_ - 1.0) < kFrankProductWindow) return x * y;
      if (frank_s_ <= kFrankGodelCutoff) return std::min(x, y);
      if (frank_s_ >= kFrankLukasiewiczCutoff) return std::max(x + y - 1.0, 0.0);
      return std::clamp(frank_closed_form(frank_s_, x, y), 0.0, 1.0);
  }
  return 0.0;  // unreachable
}

double TNormFamily::tconorm(double x, double y) const { return 1.0 - tnorm(1.0 - x, 1.0 - y); }

std::string TNormFamily::name() const {
  switch (kind_) {
    case TNormKind::Godel:
      return "godel";
    case TNormKind::Product:
      return "product";
    case TNormKind::Lukasiewicz:
      return "lukasiewicz";
    case TNormKind::Frank: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "frank:%.17g", frank_s_);
      return buf;
    }
  }
  return {};
}

}  // namespace neutro
