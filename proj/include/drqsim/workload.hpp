#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "drqsim/common.hpp"

namespace drqsim {

struct ProcessSpec {
  std::string id;
  Time arrival = 0;
  Time burst = 1;

  friend bool operator==(const ProcessSpec&, const ProcessSpec&) = default;
};

// Raised for malformed or invalid workload input. row is 1-based (data rows
// for CSV including any header line, array elements for JSON); field names
// the offending column when known.
class WorkloadError : public std::runtime_error {
 public:
  WorkloadError(std::string message, std::optional<std::size_t> row = std::nullopt,
                std::string field = {});

  std::optional<std::size_t> row() const { return row_; }
  const std::string& field() const { return field_; }

 private:
  std::optional<std::size_t> row_;
  std::string field_;
};

// A validated, non-empty, immutable list of processes with unique ids.
class Workload {
 public:
  // Validates every invariant; throws WorkloadError.
  explicit Workload(std::vector<ProcessSpec> processes);

  std::span<const ProcessSpec> processes() const { return processes_; }
  std::size_t size() const { return processes_.size(); }
  const ProcessSpec& operator[](std::size_t i) const { return processes_[i]; }

  // Position of id in the workload, or nullopt.
  std::optional<std::size_t> index_of(std::string_view id) const;

  Time total_burst() const;

  friend bool operator==(const Workload&, const Workload&) = default;

 private:
  std::vector<ProcessSpec> processes_;
};

enum class WorkloadFormat { csv, json };

Workload parse_workload(std::string_view input, WorkloadFormat format);
std::string serialize_workload(const Workload& workload, WorkloadFormat format);

struct GeneratorParams {
  std::size_t count = 1;
  std::uint64_t seed = 0;
  Time arrival_max = 0;
  Time burst_max = 50;

  // arrival_max = 2 * count, burst_max = 50.
  static GeneratorParams defaults_for(std::size_t count, std::uint64_t seed);
};

// Deterministic synthetic workload. Draws come from std::mt19937_64 seeded
// with params.seed, mapped to ranges by rejection sampling so the output is
// identical on every platform. For each process in order: arrival in
// [0, arrival_max], then burst in [1, burst_max]. Ids are P1..Pn.
Workload generate_workload(const GeneratorParams& params);

// "table1" and "ds1".."ds10". ds5 is the table1 set; the others are seeded
// stand-ins with process counts 4,5,5,6,-,10,10,15,15,20.
Workload bundled_dataset(std::string_view id);
std::vector<std::string> bundled_dataset_ids();
bool is_bundled_dataset(std::string_view id);

}  // namespace drqsim
