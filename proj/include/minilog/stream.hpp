#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace minilog {

// Lazily evaluated, possibly infinite stream of answers, enumerated strictly
// depth-first so answer order matches Prolog's clause-order search.
//
// Streams are single-consumer: forcing is not memoized, and producers may
// carry side effects (the interpreter prints its trace line the first time a
// step runs). Traverse a stream once, via next()/take()/to_vector().
template <typename T>
class Stream {
 public:
  using CellOpt = std::optional<std::pair<T, Stream<T>>>;
  using Thunk = std::function<CellOpt()>;

  Stream() = default;  // empty

  static Stream lazy(Thunk th) {
    Stream s;
    s.thunk_ = std::make_shared<Thunk>(std::move(th));
    return s;
  }

  static Stream single(T value) {
    return lazy([v = std::move(value)]() -> CellOpt {
      return std::make_pair(v, Stream());
    });
  }

  static Stream cons(T head, Stream tail) {
    return lazy([h = std::move(head), t = std::move(tail)]() -> CellOpt {
      return std::make_pair(h, t);
    });
  }

  // Delays construction of a whole stream; the maker runs on first force.
  static Stream defer(std::function<Stream()> make) {
    return lazy([mk = std::move(make)]() -> CellOpt { return mk().next(); });
  }

  static Stream from_vector(std::vector<T> items) {
    Stream s;
    for (auto it = items.rbegin(); it != items.rend(); ++it) {
      s = cons(std::move(*it), std::move(s));
    }
    return s;
  }

  // Force one element. Re-forcing the same Stream value repeats the work
  // (and any producer side effects); see the single-consumer note above.
  CellOpt next() const {
    if (!thunk_) return std::nullopt;
    return (*thunk_)();
  }

  bool is_empty_rep() const { return thunk_ == nullptr; }

 private:
  std::shared_ptr<Thunk> thunk_;
};

// All of a, then all of b; b is not even constructed until a is exhausted.
template <typename T>
Stream<T> disj(Stream<T> a, std::function<Stream<T>()> b) {
  return Stream<T>::lazy([a = std::move(a), b = std::move(b)]() ->
                         typename Stream<T>::CellOpt {
    if (auto cell = a.next()) {
      return std::make_pair(std::move(cell->first),
                            disj(std::move(cell->second), b));
    }
    return b().next();
  });
}

template <typename T>
Stream<T> disj(Stream<T> a, Stream<T> b) {
  return disj(std::move(a), std::function<Stream<T>()>([b = std::move(b)] {
                return b;
              }));
}

// Depth-first conjunction: for each x in a, all of f(x) before the next x.
template <typename T, typename F>
auto bind(Stream<T> a, F f) -> decltype(f(std::declval<T>())) {
  using Out = decltype(f(std::declval<T>()));
  return Out::lazy([a = std::move(a), f]() -> typename Out::CellOpt {
    // Iterate over failing elements rather than recurse, so long runs of
    // failures do not grow the call stack.
    Stream<T> cur = a;
    while (auto cell = cur.next()) {
      Out produced = f(cell->first);
      if (auto got = produced.next()) {
        Stream<T> rest = std::move(cell->second);
        Out tail = disj(std::move(got->second),
                        std::function<Out()>([rest = std::move(rest), f] {
                          return bind(rest, f);
                        }));
        return std::make_pair(std::move(got->first), std::move(tail));
      }
      cur = std::move(cell->second);
    }
    return std::nullopt;
  });
}

// At most the first element; later alternatives are discarded (the cut in
// its "first matching rule wins" role).
template <typename T>
Stream<T> commit(Stream<T> a) {
  return Stream<T>::lazy([a = std::move(a)]() -> typename Stream<T>::CellOpt {
    if (auto cell = a.next()) {
      return std::make_pair(std::move(cell->first), Stream<T>());
    }
    return std::nullopt;
  });
}

// First min(n, length) elements; terminates on infinite streams.
template <typename T>
std::vector<T> take(std::size_t n, Stream<T> s) {
  std::vector<T> out;
  out.reserve(n);
  while (out.size() < n) {
    auto cell = s.next();
    if (!cell) break;
    out.push_back(std::move(cell->first));
    s = std::move(cell->second);
  }
  return out;
}

// Pre: s is finite.
template <typename T>
std::vector<T> to_vector(Stream<T> s) {
  std::vector<T> out;
  while (auto cell = s.next()) {
    out.push_back(std::move(cell->first));
    s = std::move(cell->second);
  }
  return out;
}

template <typename T, typename F>
auto map_stream(Stream<T> a, F f) -> Stream<decltype(f(std::declval<T>()))> {
  using U = decltype(f(std::declval<T>()));
  return bind(std::move(a), [f](T x) { return Stream<U>::single(f(std::move(x))); });
}

}  // namespace minilog
