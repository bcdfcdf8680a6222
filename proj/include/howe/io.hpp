#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "howe/enumerate.hpp"
#include "howe/genus2.hpp"
#include "howe/howe_curve.hpp"

namespace howe {

// Published n(p) for 11 <= p <= 199.
struct TableEntry {
  std::uint32_t p;
  std::size_t n;
};
std::span<const TableEntry> published_counts();
std::optional<std::size_t> published_count(std::uint32_t p);

// F_{p^2} elements are written as [c0, c1] for c0 + c1 t.
nlohmann::json to_json(const Fq& x);
Fq fq_from_json(const FieldCtx& F, const nlohmann::json& j);

// {"roots": [[c0, c1] x 6], "split": [[i, j, k], [l, m, n]], "b": [c0, c1] | "inf"}
nlohmann::json to_json(const HoweData& H);
HoweData howe_from_json(const FieldCtx& F, const nlohmann::json& j);

// Report without timing, so equal inputs give byte-identical output.
nlohmann::json to_json(const EnumReport& report, const FieldCtx& F);

class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::filesystem::path cache_file(const std::filesystem::path& dir, std::uint32_t p);

// One curve per line: p, the six roots as twelve integers, the Igusa key kind
// and its three values as six integers.
void write_cache(const std::filesystem::path& file, const FieldCtx& F, const SuperspecialList& L);
// Every record is re-verified (distinct roots, superspecial, stored key);
// throws CacheError naming the offending line.
SuperspecialList load_cache(const std::filesystem::path& file, const FieldCtx& F);

}  // namespace howe
