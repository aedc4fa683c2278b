#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "linvar/value.hpp"

namespace linvar {

enum class EventKind { Invocation, Response };

/// One invocation or response record. Invocation payloads are argument
/// values; response payloads are result values.
struct Event {
  EventKind kind = EventKind::Invocation;
  ProcessId process;
  ObjectId object;
  std::string op_name;
  std::vector<Value> payload;

  bool operator==(const Event&) const = default;
};

Event make_invocation(ProcessId process, ObjectId object, std::string op_name,
                      std::vector<Value> args = {});
Event make_response(ProcessId process, ObjectId object, std::string op_name,
                    std::vector<Value> results = {});

/// A finite sequence of events. The index order is the real-time order;
/// histories are immutable after construction, so every derived history
/// (projection, completion, extension) is a new value.
class History {
 public:
  History() = default;
  explicit History(std::vector<Event> events) : events_(std::move(events)) {}

  std::size_t size() const { return events_.size(); }
  bool empty() const { return events_.empty(); }
  const Event& operator[](std::size_t i) const { return events_[i]; }
  std::span<const Event> events() const { return events_; }
  auto begin() const { return events_.begin(); }
  auto end() const { return events_.end(); }

  bool operator==(const History&) const = default;

 private:
  std::vector<Event> events_;
};

/// An invocation together with its matching response position, when one
/// exists. Instances are keyed by inv_index: each invocation occupies a
/// distinct history position, so inv_index identifies the operation across
/// extensions of the same history (extensions only append events).
struct OperationInstance {
  std::size_t inv_index = 0;
  std::optional<std::size_t> res_index;

  bool matched() const { return res_index.has_value(); }
  bool operator==(const OperationInstance&) const = default;
};

/// earlier's response occurs before later's invocation.
struct PrecedencePair {
  OperationInstance earlier;
  OperationInstance later;

  bool operator==(const PrecedencePair&) const = default;
};

/// How lone pending invocations are treated when listing operations:
/// MatchedOnly counts only invocation/response pairs, WithPending also
/// counts a pending invocation as a (response-less) operation.
enum class OpInterpretation { MatchedOnly, WithPending };

/// True iff every process subhistory is sequential: alternating
/// invocation/response pairs matching on object and operation name, with
/// at most a trailing lone invocation.
bool is_well_formed(const History& h);

/// Subsequence of events associated with the process. Unknown process
/// yields an empty history.
History project_process(const History& h, const ProcessId& p);

/// Subsequence of events associated with the object.
History project_object(const History& h, const ObjectId& x);

/// Maximal subhistory consisting only of invocations and matching
/// responses: drops exactly the pending invocations. Requires a
/// well-formed input.
History complete(const History& h);

/// Appends responses for distinct pending invocations to the end of h.
/// Rejects a response with no matching pending invocation and duplicate
/// responses for one invocation.
History extend(const History& h, std::span<const Event> responses);

/// The invocations with no matching response, in history order. Requires a
/// well-formed input.
std::vector<OperationInstance> pending_invocations(const History& h);

/// The operation instances of h under the chosen interpretation, ordered by
/// invocation index. Requires a well-formed input.
std::vector<OperationInstance> operations(const History& h,
                                          OpInterpretation interp);

/// All precedence pairs over operations(h, interp): earlier's response
/// index is below later's invocation index. A response-less instance never
/// appears as `earlier`. Pairs are sorted by (earlier, later) invocation
/// index.
std::vector<PrecedencePair> precedence(const History& h,
                                       OpInterpretation interp);

/// True iff for every process the two projections are identical event
/// sequences (object, operation name and payload all equal).
bool equivalent(const History& h1, const History& h2);

/// True iff the events form invocation/response pairs back to back, with
/// at most one trailing lone invocation.
bool is_sequential(const History& h);

/// "B r Write(1) => ok" for a matched instance, "B r Write(1)" for a
/// pending one. For reports and diagnostics.
std::string describe_operation(const History& h, const OperationInstance& op);

}  // namespace linvar
