#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>

namespace mucheck {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string msg, int line, int col)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) +
                           ": " + msg),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FunctorMismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TimeoutError : public std::runtime_error {
 public:
  TimeoutError() : std::runtime_error("deadline exceeded") {}
};

// Cooperative deadline, checked inside solver loops.
class Deadline {
 public:
  Deadline() = default;
  static Deadline after(double seconds) {
    Deadline d;
    d.at_ = std::chrono::steady_clock::now() +
            std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                std::chrono::duration<double>(seconds));
    return d;
  }
  bool expired() const {
    return at_ && std::chrono::steady_clock::now() >= *at_;
  }
  void check() const {
    if (expired()) throw TimeoutError();
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> at_;
};

}  // namespace mucheck
