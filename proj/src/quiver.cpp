#include "ppalg/quiver.hpp"

#include <cctype>
#include <map>
#include <mutex>

#include "ppalg/errors.hpp"

namespace ppalg {

DynkinType::DynkinType(DynkinFamily family, int rank) : family_(family), rank_(rank) {
  bool ok = false;
  switch (family) {
    case DynkinFamily::A: ok = rank >= 2; break;
    case DynkinFamily::D: ok = rank >= 4; break;
    case DynkinFamily::E: ok = rank >= 6 && rank <= 8; break;
  }
  if (!ok) throw InvalidType("invalid Dynkin rank " + std::to_string(rank) + " for family " + name().substr(0, 1));
}

DynkinType DynkinType::parse(std::string_view text) {
  if (text.size() < 2) throw InvalidType("cannot parse Dynkin type '" + std::string(text) + "'");
  DynkinFamily family;
  switch (std::toupper(static_cast<unsigned char>(text[0]))) {
    case 'A': family = DynkinFamily::A; break;
    case 'D': family = DynkinFamily::D; break;
    case 'E': family = DynkinFamily::E; break;
    default: throw InvalidType("unknown Dynkin family in '" + std::string(text) + "'");
  }
  int rank = 0;
  for (char c : text.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw InvalidType("cannot parse Dynkin rank in '" + std::string(text) + "'");
    }
    rank = rank * 10 + (c - '0');
    if (rank > 1000) throw InvalidType("Dynkin rank too large");
  }
  return DynkinType(family, rank);
}

std::string DynkinType::name() const {
  const char letter = family_ == DynkinFamily::A ? 'A' : family_ == DynkinFamily::D ? 'D' : 'E';
  return std::string(1, letter) + std::to_string(rank_);
}

Quiver build_quiver(const DynkinType& type) {
  Quiver q;
  const int n = type.rank();
  q.vertex_count = n;
  auto add = [&](int s, int t) {
    q.arrows.push_back({"a" + std::to_string(q.arrows.size() + 1), s - 1, t - 1});
  };
  switch (type.family()) {
    case DynkinFamily::A:
      for (int k = 1; k < n; ++k) add(k, k + 1);
      break;
    case DynkinFamily::D:
      add(1, 3);
      add(2, 3);
      for (int k = 3; k < n; ++k) add(k, k + 1);
      break;
    case DynkinFamily::E:
      for (int k = 1; k < n - 1; ++k) add(k, k + 1);
      add(n, 3);
      break;
  }
  return q;
}

Quiver double_quiver(const Quiver& q) {
  Quiver d;
  d.vertex_count = q.vertex_count;
  for (const auto& a : q.arrows) {
    d.arrows.push_back(a);
    d.arrows.push_back({a.id + "*", a.target, a.source});
  }
  return d;
}

std::shared_ptr<const Quiver> shared_double_quiver(const DynkinType& type) {
  static std::mutex mutex;
  static std::map<std::string, std::shared_ptr<const Quiver>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[type.name()];
  if (!slot) slot = std::make_shared<const Quiver>(double_quiver(build_quiver(type)));
  return slot;
}

int positive_root_count(const DynkinType& type) {
  const int n = type.rank();
  switch (type.family()) {
    case DynkinFamily::A: return n * (n + 1) / 2;
    case DynkinFamily::D: return n * n - n;
    case DynkinFamily::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
  }
  return 0;
}

int bilinear_form(const Quiver& q, const DimensionVector& d, const DimensionVector& e) {
  const auto n = static_cast<std::size_t>(q.vertex_count);
  if (d.size() != n || e.size() != n) throw DimensionMismatch("dimension vector length mismatch");
  int value = 0;
  for (std::size_t i = 0; i < n; ++i) value += 2 * d[i] * e[i];
  for (const auto& a : q.arrows) {
    value -= d[a.source] * e[a.target] + e[a.source] * d[a.target];
  }
  return value;
}

int bilinear_form(const DynkinType& type, const DimensionVector& d, const DimensionVector& e) {
  return bilinear_form(build_quiver(type), d, e);
}

nlohmann::json to_json(const Quiver& q) {
  nlohmann::json arrows = nlohmann::json::array();
  for (const auto& a : q.arrows) {
    arrows.push_back({{"id", a.id}, {"src", a.source + 1}, {"tgt", a.target + 1}});
  }
  return {{"vertices", q.vertex_count}, {"arrows", arrows}};
}

Quiver quiver_from_json(const nlohmann::json& j) {
  Quiver q;
  q.vertex_count = j.at("vertices").get<int>();
  for (const auto& a : j.at("arrows")) {
    Arrow arrow{a.at("id").get<std::string>(), a.at("src").get<int>() - 1, a.at("tgt").get<int>() - 1};
    if (arrow.source < 0 || arrow.source >= q.vertex_count || arrow.target < 0 ||
        arrow.target >= q.vertex_count) {
      throw InvalidArgument("arrow endpoint out of range");
    }
    q.arrows.push_back(std::move(arrow));
  }
  return q;
}

}  // namespace ppalg
