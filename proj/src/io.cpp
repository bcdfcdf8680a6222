#include "howe/io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

namespace howe {

namespace {

using nlohmann::json;

constexpr std::array<TableEntry, 42> kPublished{{
    {11, 4},     {13, 3},     {17, 10},    {19, 4},     {23, 33},    {29, 45},    {31, 59},
    {37, 41},    {41, 105},   {43, 79},    {47, 235},   {53, 167},   {59, 259},   {61, 243},
    {67, 260},   {71, 742},   {73, 316},   {79, 595},   {83, 655},   {89, 863},   {97, 802},
    {101, 1207}, {103, 1151}, {107, 1237}, {109, 1193}, {113, 1323}, {127, 2013}, {131, 2606},
    {137, 2430}, {139, 2447}, {149, 3082}, {151, 3553}, {157, 3427}, {163, 3518}, {167, 6268},
    {173, 4780}, {179, 5771}, {181, 5419}, {191, 9610}, {193, 6298}, {197, 6839}, {199, 8351},
}};

std::string header_line(const FieldCtx& F, std::size_t count) {
  std::ostringstream os;
  os << "# howe-cache v1 p=" << F.p() << " modulus=" << F.modulus_str() << " count=" << count;
  return os.str();
}

[[noreturn]] void cache_fail(const std::filesystem::path& file, std::size_t line, const std::string& why) {
  throw CacheError(file.string() + ":" + std::to_string(line) + ": " + why);
}

}  // namespace

std::span<const TableEntry> published_counts() { return kPublished; }

std::optional<std::size_t> published_count(std::uint32_t p) {
  for (const TableEntry& e : kPublished)
    if (e.p == p) return e.n;
  return std::nullopt;
}

json to_json(const Fq& x) { return json::array({x.c0, x.c1}); }

Fq fq_from_json(const FieldCtx& F, const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected [c0, c1]");
  const auto c0 = j[0].get<std::uint64_t>();
  const auto c1 = j[1].get<std::uint64_t>();
  if (c0 >= F.p() || c1 >= F.p()) throw std::invalid_argument("coordinate out of range");
  return F.make(c0, c1);
}

json to_json(const HoweData& H) {
  json roots = json::array();
  for (const Fq& r : H.C.roots()) roots.push_back(to_json(r));
  const auto w1 = H.split.first();
  const auto w2 = H.split.second();
  return json{{"roots", roots},
              {"split", json::array({json(w1), json(w2)})},
              {"b", H.b.is_infinite() ? json("inf") : to_json(H.b.value())}};
}

HoweData howe_from_json(const FieldCtx& F, const json& j) {
  const json& roots = j.at("roots");
  if (!roots.is_array() || roots.size() != 6) throw std::invalid_argument("expected six roots");
  std::array<Fq, 6> r;
  for (std::size_t i = 0; i < 6; ++i) r[i] = fq_from_json(F, roots[i]);
  Genus2Curve C(r);
  // Indices refer to the listed order, which need not be sorted.
  std::uint8_t mask = 0;
  for (int i : j.at("split").at(0).get<std::array<int, 3>>()) {
    if (i < 0 || i > 5) throw std::invalid_argument("split index out of range");
    mask |= static_cast<std::uint8_t>(1u << C.index_of(ProjPoint::finite(r[i])));
  }
  const json& b = j.at("b");
  const ProjPoint bp = b.is_string() && b.get<std::string>() == "inf" ? ProjPoint::infinity(F)
                                                                       : ProjPoint::finite(fq_from_json(F, b));
  return HoweData(C, WeierstrassSplit(mask), bp);
}

json to_json(const EnumReport& report, const FieldCtx& F) {
  json reps = json::array();
  for (const HoweData& H : report.representatives) reps.push_back(to_json(H));
  json out{{"p", report.p},
           {"modulus", F.modulus_str()},
           {"strategy", std::string(1, report.strategy)},
           {"n", report.n},
           {"ratio", report.ratio},
           {"h0_size", report.h0_size}};
  if (report.strategy == 'B') out["genus2_count"] = report.genus2_count;
  if (auto expected = published_count(report.p)) out["published_n"] = *expected;
  out["representatives"] = std::move(reps);
  return out;
}

std::filesystem::path cache_file(const std::filesystem::path& dir, std::uint32_t p) {
  return dir / ("superspecial_p" + std::to_string(p) + ".txt");
}

void write_cache(const std::filesystem::path& file, const FieldCtx& F, const SuperspecialList& L) {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  const std::filesystem::path tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw CacheError("cannot write " + tmp.string());
    out << header_line(F, L.size()) << '\n';
    for (const Genus2Curve& C : L.curves()) {
      out << F.p();
      for (const Fq& r : C.roots()) out << ' ' << r.c0 << ' ' << r.c1;
      const IgusaKey key = igusa_key(C);
      out << ' ' << int(key.kind);
      for (const Fq& v : key.values) out << ' ' << v.c0 << ' ' << v.c1;
      out << '\n';
    }
    if (!out) throw CacheError("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, file);
}

SuperspecialList load_cache(const std::filesystem::path& file, const FieldCtx& F) {
  std::ifstream in(file);
  if (!in) throw CacheError("cannot open " + file.string());
  std::string line;
  if (!std::getline(in, line)) cache_fail(file, 1, "missing header");
  const std::string prefix = "# howe-cache v1 p=" + std::to_string(F.p()) + " modulus=" + F.modulus_str() + " count=";
  if (line.rfind(prefix, 0) != 0) cache_fail(file, 1, "header does not match this field");
  std::size_t count = 0;
  try {
    count = std::stoul(line.substr(prefix.size()));
  } catch (const std::exception&) {
    cache_fail(file, 1, "bad record count");
  }

  SuperspecialList list;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::vector<std::uint64_t> v;
    for (std::uint64_t x; ls >> x;) v.push_back(x);
    if (!ls.eof() || v.size() != 20) cache_fail(file, lineno, "expected 20 integers");
    if (v[0] != F.p()) cache_fail(file, lineno, "wrong characteristic");
    for (std::size_t i = 1; i < 20; ++i)
      if (i != 13 && v[i] >= F.p()) cache_fail(file, lineno, "coordinate out of range");
    if (v[13] > 3) cache_fail(file, lineno, "bad key kind");
    std::array<Fq, 6> roots;
    for (std::size_t i = 0; i < 6; ++i) roots[i] = F.make(v[1 + 2 * i], v[2 + 2 * i]);
    std::optional<Genus2Curve> C;
    try {
      C.emplace(roots);
    } catch (const std::invalid_argument&) {
      cache_fail(file, lineno, "repeated root");
    }
    if (!is_superspecial(*C)) cache_fail(file, lineno, "curve is not superspecial");
    IgusaKey stored{static_cast<std::uint8_t>(v[13]), {F.make(v[14], v[15]), F.make(v[16], v[17]), F.make(v[18], v[19])}};
    const IgusaKey key = igusa_key(*C);
    if (!(key == stored)) cache_fail(file, lineno, "Igusa key mismatch");
    if (!list.insert(*C, key)) cache_fail(file, lineno, "duplicate isomorphism class");
  }
  if (list.size() != count) cache_fail(file, lineno, "record count does not match header");
  return list;
}

}  // namespace howe
