#include "drqsim/workload.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"

namespace drqsim {

namespace {

std::string locate(std::optional<std::size_t> row, const std::string& field) {
  std::string where;
  if (row) where = "row " + std::to_string(*row);
  if (!field.empty()) where += (where.empty() ? "field " : ", field ") + field;
  return where;
}

bool valid_id(std::string_view id) {
  if (id.empty() || id.size() > 64) return false;
  return std::all_of(id.begin(), id.end(), [](unsigned char c) {
    return std::isgraph(c) && c != ',' && c != '"' && c != '\'' && c != '<' && c != '>' && c != '&';
  });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

Time parse_time_field(std::string_view text, std::size_t row, const char* field) {
  Time v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    throw WorkloadError("not an integer: '" + std::string(text) + "'", row, field);
  return v;
}

void check_fields(const ProcessSpec& p, std::optional<std::size_t> row) {
  if (!valid_id(p.id)) throw WorkloadError("invalid id '" + p.id + "'", row, "id");
  if (p.arrival < 0) throw WorkloadError("arrival must be >= 0", row, "arrival");
  if (p.burst < 1) throw WorkloadError("burst must be >= 1", row, "burst");
}

// Unbiased draw in [0, span] from a 64-bit engine.
std::uint64_t draw_inclusive(std::mt19937_64& rng, std::uint64_t span) {
  if (span == UINT64_MAX) return rng();
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % range + 1) % range;
  for (;;) {
    std::uint64_t x = rng();
    if (x <= limit) return x % range;
  }
}

struct BundledEntry {
  const char* id;
  std::size_t count;
  std::uint64_t seed;
};

// ds5 is served from the table1 data, so its seed is unused.
constexpr std::array<BundledEntry, 10> kBundled{{
    {"ds1", 4, 1001},
    {"ds2", 5, 1002},
    {"ds3", 5, 1003},
    {"ds4", 6, 1004},
    {"ds5", 6, 0},
    {"ds6", 10, 1006},
    {"ds7", 10, 1007},
    {"ds8", 15, 1008},
    {"ds9", 15, 1009},
    {"ds10", 20, 1010},
}};

Workload table1() {
  return Workload({{"P1", 5, 5}, {"P2", 4, 6}, {"P3", 3, 7}, {"P4", 1, 9}, {"P5", 2, 2}, {"P6", 6, 3}});
}

}  // namespace

WorkloadError::WorkloadError(std::string message, std::optional<std::size_t> row, std::string field)
    : std::runtime_error([&] {
        std::string where = locate(row, field);
        return where.empty() ? message : where + ": " + message;
      }()),
      row_(row),
      field_(std::move(field)) {}

Workload::Workload(std::vector<ProcessSpec> processes) : processes_(std::move(processes)) {
  if (processes_.empty()) throw WorkloadError("workload is empty");
  std::set<std::string_view> seen;
  for (std::size_t i = 0; i < processes_.size(); ++i) {
    check_fields(processes_[i], i + 1);
    if (!seen.insert(processes_[i].id).second)
      throw WorkloadError("duplicate id '" + processes_[i].id + "'", i + 1, "id");
  }
}

std::optional<std::size_t> Workload::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < processes_.size(); ++i)
    if (processes_[i].id == id) return i;
  return std::nullopt;
}

Time Workload::total_burst() const {
  Time sum = 0;
  for (const auto& p : processes_) sum += p.burst;
  return sum;
}

namespace {

Workload parse_csv(std::string_view input) {
  std::vector<ProcessSpec> out;
  std::set<std::string> seen;
  std::size_t line_no = 0;
  bool first_content = true;
  while (!input.empty()) {
    auto nl = input.find('\n');
    std::string_view line = input.substr(0, nl);
    input = nl == std::string_view::npos ? std::string_view{} : input.substr(nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;

    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    for (;;) {
      auto comma = line.find(',', pos);
      fields.push_back(trim(line.substr(pos, comma - pos)));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }

    if (first_content) {
      first_content = false;
      std::string head(fields[0]);
      std::transform(head.begin(), head.end(), head.begin(), [](unsigned char c) { return std::tolower(c); });
      if (head == "id") continue;
    }
    if (fields.size() != 3)
      throw WorkloadError("expected 3 fields (id,arrival,burst), got " + std::to_string(fields.size()), line_no);

    ProcessSpec p{std::string(fields[0]), parse_time_field(fields[1], line_no, "arrival"),
                  parse_time_field(fields[2], line_no, "burst")};
    check_fields(p, line_no);
    if (!seen.insert(p.id).second) throw WorkloadError("duplicate id '" + p.id + "'", line_no, "id");
    out.push_back(std::move(p));
  }
  if (out.empty()) throw WorkloadError("workload is empty");
  return Workload(std::move(out));
}

Workload parse_json(std::string_view input) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(input);
  } catch (const nlohmann::json::parse_error& e) {
    throw WorkloadError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_array()) throw WorkloadError("expected a JSON array of processes");

  std::vector<ProcessSpec> out;
  std::set<std::string> seen;
  std::size_t row = 0;
  for (const auto& item : doc) {
    ++row;
    if (!item.is_object()) throw WorkloadError("expected an object", row);
    auto field = [&](const char* name) -> const nlohmann::json& {
      auto it = item.find(name);
      if (it == item.end()) throw WorkloadError("missing key", row, name);
      return *it;
    };
    const auto& id = field("id");
    if (!id.is_string()) throw WorkloadError("id must be a string", row, "id");
    auto integer = [&](const char* name) {
      const auto& v = field(name);
      if (!v.is_number_integer()) throw WorkloadError("not an integer", row, name);
      return v.get<Time>();
    };
    ProcessSpec p{id.get<std::string>(), integer("arrival"), integer("burst")};
    check_fields(p, row);
    if (!seen.insert(p.id).second) throw WorkloadError("duplicate id '" + p.id + "'", row, "id");
    out.push_back(std::move(p));
  }
  if (out.empty()) throw WorkloadError("workload is empty");
  return Workload(std::move(out));
}

}  // namespace

Workload parse_workload(std::string_view input, WorkloadFormat format) {
  return format == WorkloadFormat::csv ? parse_csv(input) : parse_json(input);
}

std::string serialize_workload(const Workload& workload, WorkloadFormat format) {
  if (format == WorkloadFormat::json) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& p : workload.processes())
      doc.push_back({{"id", p.id}, {"arrival", p.arrival}, {"burst", p.burst}});
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "id,arrival,burst\n";
  for (const auto& p : workload.processes()) out << p.id << ',' << p.arrival << ',' << p.burst << '\n';
  return out.str();
}

GeneratorParams GeneratorParams::defaults_for(std::size_t count, std::uint64_t seed) {
  return {count, seed, static_cast<Time>(2 * count), 50};
}

Workload generate_workload(const GeneratorParams& params) {
  if (params.count == 0) throw WorkloadError("count must be >= 1");
  if (params.arrival_max < 0) throw WorkloadError("arrival_max must be >= 0");
  if (params.burst_max < 1) throw WorkloadError("burst_max must be >= 1");

  std::mt19937_64 rng(params.seed);
  std::vector<ProcessSpec> out;
  out.reserve(params.count);
  for (std::size_t i = 0; i < params.count; ++i) {
    Time arrival = static_cast<Time>(draw_inclusive(rng, static_cast<std::uint64_t>(params.arrival_max)));
    Time burst = 1 + static_cast<Time>(draw_inclusive(rng, static_cast<std::uint64_t>(params.burst_max - 1)));
    out.push_back({"P" + std::to_string(i + 1), arrival, burst});
  }
  return Workload(std::move(out));
}

Workload bundled_dataset(std::string_view id) {
  if (id == "table1" || id == "ds5") return table1();
  for (const auto& e : kBundled)
    if (id == e.id) return generate_workload(GeneratorParams::defaults_for(e.count, e.seed));
  throw WorkloadError("unknown bundled dataset '" + std::string(id) + "'");
}

std::vector<std::string> bundled_dataset_ids() {
  std::vector<std::string> ids{"table1"};
  for (const auto& e : kBundled) ids.emplace_back(e.id);
  return ids;
}

bool is_bundled_dataset(std::string_view id) {
  auto ids = bundled_dataset_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

}  // namespace drqsim
