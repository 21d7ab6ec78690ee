#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace regcrys {

struct PropertyResult {
  std::string name;
  std::size_t checked = 0;  // instances where the assertion was evaluated
  std::size_t skipped = 0;  // instances outside the hypothesis
  std::size_t failed = 0;
  std::string counterexample;  // the first failure in enumeration order
  bool ok() const { return failed == 0; }
};

struct SuiteReport {
  std::string suite;
  std::vector<PropertyResult> properties;
  bool ok() const {
    return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.ok(); });
  }
};

struct VerifyOptions {
  std::optional<int> max;  // size bound; for split and paget the component bound
  std::optional<int> e;    // restrict to one e where the suite ranges over several
  unsigned threads = 0;    // 0: hardware concurrency
};

const std::vector<std::string>& suite_names();  // without "all"

/// Runs one suite, or every suite for "all". Throws DomainError for an
/// unknown name.
std::vector<SuiteReport> run_verification(std::string_view suite, const VerifyOptions& opts = {});

/// f applied to every element, spread over worker threads; results come
/// back in input order. The first exception (in input order) is rethrown.
template <class T, class F>
auto parallel_map(const std::vector<T>& in, F f, unsigned threads = 0) -> std::vector<decltype(f(in.front()))> {
  using R = decltype(f(in.front()));
  std::vector<std::optional<R>> slots(in.size());
  std::vector<std::exception_ptr> errors(in.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < in.size(); k = next++) {
      try {
        slots[k].emplace(f(in[k]));
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, in.size()));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }
  std::vector<R> out;
  out.reserve(in.size());
  for (std::size_t k = 0; k < in.size(); ++k) {
    if (errors[k]) std::rethrow_exception(errors[k]);
    out.push_back(std::move(*slots[k]));
  }
  return out;
}

}  // namespace regcrys
