#include "splitcyc/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "splitcyc/error.hpp"
#include "splitcyc/voltage.hpp"

namespace splitcyc {

namespace {

struct Tally {
  std::vector<long long> directed;
  std::vector<int> min_length;
  long long visited = 0;
  long long closed = 0;
  long long contractible = 0;
  int contractible_min = 0;

  explicit Tally(int types) : directed(types + 1, 0), min_length(types + 1, 0) {}

  static void keep_min(int& slot, int len) {
    if (slot == 0 || len < slot) slot = len;
  }

  void merge(const Tally& o) {
    for (std::size_t t = 0; t < directed.size(); ++t) {
      directed[t] += o.directed[t];
      if (o.min_length[t]) keep_min(min_length[t], o.min_length[t]);
    }
    visited += o.visited;
    closed += o.closed;
    contractible += o.contractible;
    if (o.contractible_min) keep_min(contractible_min, o.contractible_min);
  }
};

class Walker {
 public:
  Walker(SearchState& st, const SearchOptions& opt, const CloseVisitor& visitor, Tally& tally)
      : st_(st), max_len_(opt.max_length.value_or(st.map().vertex_count())), visitor_(visitor), tally_(tally) {}

  // tries to close the current path, then explores its children
  void expand() {
    try_close();
    if (st_.length() >= max_len_) return;
    const RotationMap& m = st_.map();
    const Vertex a = st_.last();
    for (int i = 0; i < m.degree(a); ++i) {
      const Vertex w = m.neighbor(a, i);
      if (st_.on_path(w)) continue;
      if (!st_.extend(w)) continue;
      ++tally_.visited;
      expand();
      st_.retract();
    }
  }

  void try_close() {
    CloseResult r = st_.close();
    if (r.status != CloseStatus::Closed) return;
    ++tally_.closed;
    const SplitVerdict& v = r.verdict;
    if (visitor_) visitor_(st_.path(), v);
    if (!v.separating) return;
    const int len = st_.length();
    if (v.contractible) {
      ++tally_.contractible;
      Tally::keep_min(tally_.contractible_min, len);
      return;
    }
    ++tally_.directed[v.type];
    Tally::keep_min(tally_.min_length[v.type], len);
  }

 private:
  SearchState& st_;
  int max_len_;
  const CloseVisitor& visitor_;
  Tally& tally_;
};

}  // namespace

TypeTable enumerate(const RotationMap& map, Vertex root, const SearchOptions& options, const CloseVisitor& visitor) {
  if (!is_simplicial_triangulation(map)) throw Error(ErrorCode::NotTriangulation, "search needs a simplicial triangulation");
  if (root < 0 || root >= map.vertex_count()) throw Error(ErrorCode::VertexOutOfRange, "root " + std::to_string(root));
  if (options.assume_transitive && !check_translation_automorphism(map))
    throw Error(ErrorCode::NotTransitive, "i -> i+1 is not an automorphism of the map");
  if (options.workers < 1) throw Error(ErrorCode::InvalidParameter, "workers must be >= 1");

  const int g = map.genus();
  const int types = g / 2;
  const StateOptions so{options.remark2, options.seam_remark2, options.test4};
  const int max_len = options.max_length.value_or(map.vertex_count());

  Tally total(types);
  // first level (root, v1) runs here; each surviving (root, v1, v2) is a task
  std::vector<std::pair<Vertex, Vertex>> tasks;
  {
    SearchState st(map, root, so);
    if (max_len >= 2) {
      for (Vertex v1 : map.rotation(root)) {
        st.extend(v1);
        ++total.visited;
        if (max_len >= 3) {
          for (Vertex v2 : map.rotation(v1))
            if (v2 != root) tasks.emplace_back(v1, v2);
        }
        st.retract();
      }
    }
  }

  std::vector<Tally> results(tasks.size(), Tally(types));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    SearchState st(map, root, so);
    for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();) {
      auto [v1, v2] = tasks[t];
      st.extend(v1);
      if (st.extend(v2)) {
        ++results[t].visited;
        Walker(st, options, visitor, results[t]).expand();
        st.retract();
      }
      st.retract();
    }
  };
  const int nthreads = std::min<int>(options.workers, static_cast<int>(std::max<std::size_t>(tasks.size(), 1)));
  if (nthreads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    std::exception_ptr failure;
    std::mutex mu;
    for (int k = 0; k < nthreads; ++k)
      pool.emplace_back([&] {
        try {
          work();
        } catch (...) {
          std::lock_guard lock(mu);
          if (!failure) failure = std::current_exception();
          next.store(tasks.size());
        }
      });
    pool.clear();
    if (failure) std::rethrow_exception(failure);
  }
  for (const Tally& r : results) total.merge(r);

  TypeTable out;
  out.genus = g;
  out.vertices = map.vertex_count();
  out.root = root;
  for (int t = 1; t <= types; ++t) {
    TypeRow row;
    row.type = t;
    row.directed = total.directed[t];
    row.nsc = total.directed[t] / 2;
    row.min_length = total.min_length[t];
    out.rows.push_back(row);
    out.splitting_directed += row.directed;
  }
  out.visited = total.visited;
  out.closed = total.closed;
  out.contractible_directed = total.contractible;
  out.contractible_min_length = total.contractible_min;
  return out;
}

}  // namespace splitcyc
