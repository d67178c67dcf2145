#ifndef BOSFLP_INSTANCE_HPP
#define BOSFLP_INSTANCE_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bosflp {

// Thrown by the codecs; line is 1-based within the offending file.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Facility location instance. All coefficients are nonnegative integers;
// integrality is what makes objective-value granularity filtering sound.
struct Instance {
  int n = 0;
  int d_max = 0;
  std::vector<std::vector<int>> dist;      // n x n, nonnegative
  std::vector<long long> cost;             // c_j
  std::vector<long long> capacity;         // gamma_j
  std::vector<long long> demand_mean;      // w_i
  std::vector<std::pair<int, int>> arcs;   // (i,j) with dist[i][j] <= d_max, row-major

  // Adjacency derived from arcs.
  std::vector<std::vector<int>> facilities_of_node;  // i -> { j : (i,j) in arcs }
  std::vector<std::vector<int>> nodes_of_facility;   // j -> { i : (i,j) in arcs }

  void rebuild_arcs();  // recompute arcs + adjacency from dist and d_max
  void validate() const;

  long long total_demand_mean() const;
  // gcd of the facility costs; 1 when all costs are zero. Granularity of f1.
  long long cost_granularity() const;
};

struct ScenarioSet {
  int count = 0;                                  // |N|
  std::vector<std::vector<long long>> demand;     // count x n, W_i^nu
  uint64_t seed = 0;
  double cv = 0.0;

  long long scenario_total(int nu) const;
  std::vector<double> mean_scenario() const;      // componentwise mean
  void validate(int n) const;
};

struct GenParams {
  int grid = 100;        // node coordinates drawn uniformly on [0, grid]^2
  int cost_min = 10, cost_max = 60;
  int cap_min = 30, cap_max = 120;
  int demand_min = 20, demand_max = 80;
  double avg_degree = 3.0;  // target mean number of non-self facilities in reach
};

std::vector<std::pair<int, int>> build_arcs(const std::vector<std::vector<int>>& dist,
                                            int d_max);

Instance generate_instance(int n, uint64_t seed, const GenParams& params = {});

// Demand scenarios: W_i^nu = max(0, round(w_i * m)) where m is a lognormal
// multiplier with mean 1 and coefficient of variation cv.
ScenarioSet generate_scenarios(const Instance& instance, int count, double cv,
                               uint64_t seed);

void write_instance(std::ostream& os, const Instance& inst);
void write_instance(const std::string& path, const Instance& inst);
Instance read_instance(std::istream& is);
Instance read_instance(const std::string& path);

void write_scenarios(std::ostream& os, const ScenarioSet& scen);
void write_scenarios(const std::string& path, const ScenarioSet& scen);
ScenarioSet read_scenarios(std::istream& is, const Instance& inst);
ScenarioSet read_scenarios(const std::string& path, const Instance& inst);

}  // namespace bosflp

#endif
