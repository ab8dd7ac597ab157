#include "untwist/bounds.hpp"

#include "untwist/error.hpp"

#include <algorithm>
#include <charconv>
#include <future>
#include <string>
#include <vector>

namespace untwist {

std::size_t lower_bound_twists(const SeifertMatrix& v, const std::set<Field>& fields) {
  std::size_t best = 0;
  for (const Field& f : fields) best = std::max(best, module_rank(v, f).rank);
  return best;
}

std::size_t upper_bound_twists(const SeifertMatrix& v) { return 2 * v.genus(); }

SeifertMatrix witness_family(std::size_t g) {
  const IntMatrix block{{0, 1}, {2, 0}};
  IntMatrix m;
  for (std::size_t i = 0; i < g; ++i) m = m.direct_sum(block);
  return SeifertMatrix::validate(std::move(m), g == 1 ? "K" : std::to_string(g) + "K");
}

BoundsReport bounds_report(const SeifertMatrix& v, const std::set<Field>& fields) {
  BoundsReport report;
  report.genus = v.genus();
  report.alexander = alexander_polynomial(v);

  std::vector<std::pair<Field, std::future<std::size_t>>> jobs;
  for (const Field& f : fields)
    jobs.emplace_back(f, std::async(std::launch::async, [&v, f] { return module_rank(v, f).rank; }));
  for (auto& [field, job] : jobs) {
    const std::size_t rank = job.get();
    report.ranks.emplace(field, rank);
    report.lower_bound = std::max(report.lower_bound, rank);
  }
  report.upper_bound = upper_bound_twists(v);
  report.tight = report.lower_bound == report.upper_bound;
  return report;
}

std::set<Field> parse_prime_list(std::string_view list) {
  std::set<Field> fields;
  while (!list.empty()) {
    const auto comma = list.find(',');
    std::string_view item = list.substr(0, comma);
    list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) continue;
    std::int64_t p = 0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), p);
    if (ec != std::errc{} || end != item.data() + item.size())
      throw Error(ErrorCode::SchemaViolation, "not an integer in prime list: '" + std::string(item) + "'");
    fields.insert(Field::prime(p));
  }
  return fields;
}

std::set<Field> default_fields(std::optional<std::string_view> primes_override) {
  std::set<Field> fields = primes_override ? parse_prime_list(*primes_override)
                                           : parse_prime_list("2,3,5,7,11,13");
  fields.insert(Field::rationals());
  return fields;
}

}  // namespace untwist
