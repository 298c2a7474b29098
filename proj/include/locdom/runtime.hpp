#pragma once

// Deterministic synchronous executor for r-local node programs.
//
// In the model simulated here messages are unbounded, so r rounds of
// communication are information-equivalent to knowing the radius-r ball.
// The runtime therefore hands every vertex its ball (plus the annotations
// attached to ball members) instead of materializing a message loop; node
// programs stay pure functions and locality is mechanically enforced: a
// program can only read what its LocalView exposes, and any query outside
// the ball is a hard fault.
//
// Rounds are charged per phase. By default a phase costs its declared
// radius; a phase may override the charge where a fixed accounting is part
// of its contract (see the preprocessing pipeline in mds.hpp).

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "locdom/config.hpp"
#include "locdom/graph.hpp"

namespace locdom {

struct LocalityError : std::logic_error {
  explicit LocalityError(VertexId v)
      : std::logic_error("locality violation: vertex " + std::to_string(v) +
                         " is outside the program's ball") {}
};

struct PipelineConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

using AnnotationValue = std::variant<std::uint64_t, VertexSet>;
using AnnotationRow = std::map<std::string, AnnotationValue>;
using AnnotationMap = std::map<VertexId, AnnotationRow>;

// Everything a node program may read: the ball around its vertex and the
// annotations of vertices inside that ball.
class LocalView {
 public:
  LocalView(const Ball& ball, const AnnotationMap& host_annotations)
      : ball_(&ball), annotations_(&host_annotations) {}

  VertexId center() const { return ball_->center; }
  int radius() const { return ball_->radius; }
  const Graph& subgraph() const { return ball_->subgraph; }
  const VertexSet& vertices() const { return ball_->subgraph.vertices(); }

  bool in_view(VertexId v) const { return ball_->subgraph.has_vertex(v); }

  const VertexSet& neighbors(VertexId v) const {
    require_in_view(v);
    return ball_->subgraph.neighbors(v);
  }

  std::optional<std::uint64_t> flag(VertexId v, const std::string& field) const {
    require_in_view(v);
    const AnnotationValue* val = find(v, field);
    if (!val) return std::nullopt;
    return std::get<std::uint64_t>(*val);
  }

  const VertexSet* set_field(VertexId v, const std::string& field) const {
    require_in_view(v);
    const AnnotationValue* val = find(v, field);
    if (!val) return nullptr;
    return &std::get<VertexSet>(*val);
  }

 private:
  void require_in_view(VertexId v) const {
    if (!in_view(v)) throw LocalityError(v);
  }
  const AnnotationValue* find(VertexId v, const std::string& field) const {
    auto row = annotations_->find(v);
    if (row == annotations_->end()) return nullptr;
    auto it = row->second.find(field);
    if (it == row->second.end()) return nullptr;
    return &it->second;
  }

  const Ball* ball_;
  const AnnotationMap* annotations_;
};

// A deterministic per-vertex algorithm: collect the radius-`radius` ball,
// then decide from it (and the shared config) alone.
template <typename Out>
struct NodeProgram {
  std::string name;
  int radius = 0;
  std::function<Out(const LocalView&, const Config&)> decide;
};

struct RoundTrace {
  std::string phase_name;
  int rounds_used = 0;
};

inline int total_rounds(const std::vector<RoundTrace>& traces) {
  int sum = 0;
  for (const RoundTrace& t : traces) sum += t.rounds_used;
  return sum;
}

template <typename Out>
struct ProgramResult {
  std::map<VertexId, Out> outputs;
  RoundTrace trace;
};

// Runs `prog` at every vertex of g in lockstep. Outputs are keyed by
// vertex, so any evaluation order is unobservable; this implementation is
// sequential over the sorted vertex list.
template <typename Out>
ProgramResult<Out> run_program(const Graph& g, const NodeProgram<Out>& prog,
                               const AnnotationMap& annotations,
                               const Config& cfg,
                               std::optional<int> charged_rounds = std::nullopt) {
  for (const auto& [v, row] : annotations) {
    (void)row;
    if (!g.has_vertex(v)) {
      throw std::invalid_argument("annotation for unknown vertex " +
                                  std::to_string(v));
    }
  }
  ProgramResult<Out> result;
  for (VertexId v : g.vertices()) {
    Ball ball = closed_ball(g, v, prog.radius);
    LocalView view(ball, annotations);
    result.outputs.emplace(v, prog.decide(view, cfg));
  }
  result.trace = RoundTrace{prog.name, charged_rounds.value_or(prog.radius)};
  return result;
}

// One stage of a multi-phase run. Phases execute as barriers: every vertex
// finishes phase k before phase k+1 starts; each phase's output rows are
// merged into the shared annotations that the next phase reads.
struct PhaseSpec {
  NodeProgram<AnnotationRow> program;
  std::vector<std::string> consumes;
  std::vector<std::string> produces;
  // Rounds charged for this phase; defaults to the program radius.
  std::optional<int> charged_rounds;
};

struct Pipeline {
  std::vector<PhaseSpec> phases;
};

// Validates the annotation dataflow: every consumed field must be produced
// by an earlier phase or supplied initially.
inline Pipeline compose_phases(std::vector<PhaseSpec> phases,
                               const std::vector<std::string>& initial_fields = {}) {
  std::vector<std::string> available = initial_fields;
  for (const PhaseSpec& p : phases) {
    for (const std::string& field : p.consumes) {
      if (std::find(available.begin(), available.end(), field) ==
          available.end()) {
        throw PipelineConfigError("phase '" + p.program.name + "' consumes '" +
                                  field + "' which no earlier phase produces");
      }
    }
    for (const std::string& field : p.produces) available.push_back(field);
  }
  return Pipeline{std::move(phases)};
}

struct PipelineRun {
  AnnotationMap annotations;
  std::vector<RoundTrace> traces;
};

inline PipelineRun run_pipeline(const Graph& g, const Pipeline& pipeline,
                                const Config& cfg,
                                AnnotationMap initial = {}) {
  PipelineRun run;
  run.annotations = std::move(initial);
  for (const PhaseSpec& phase : pipeline.phases) {
    ProgramResult<AnnotationRow> res =
        run_program(g, phase.program, run.annotations, cfg, phase.charged_rounds);
    for (auto& [v, row] : res.outputs) {
      for (auto& [field, value] : row) {
        run.annotations[v][field] = std::move(value);
      }
    }
    run.traces.push_back(std::move(res.trace));
  }
  return run;
}

}  // namespace locdom
