#pragma once

#include <stdexcept>
#include <string>

namespace sggnn {

// Base for all recoverable errors raised by the library. CLI maps these to
// exit code 1; anything else escaping to main is an internal failure (exit 2).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class CapExceeded : public Error {
public:
    CapExceeded(std::size_t n, std::size_t cap)
        : Error("size " + std::to_string(n) + " exceeds configured cap " + std::to_string(cap)) {}
};

class EmptyGraph : public Error {
public:
    EmptyGraph() : Error("graph has no edges") {}
};

class SingleClass : public Error {
public:
    SingleClass() : Error("label vector contains a single class") {}
};

class EmptyClass : public Error {
public:
    explicit EmptyClass(int c) : Error("class " + std::to_string(c) + " has no nodes") {}
};

class InvalidK : public Error {
public:
    InvalidK(int k, int n) : Error("k=" + std::to_string(k) + " outside [1, " + std::to_string(n - 1) + "]") {}
};

class InvalidQuantile : public Error {
public:
    explicit InvalidQuantile(double q) : Error("quantile " + std::to_string(q) + " outside (0, 1)") {}
};

class IndivisibleClasses : public Error {
public:
    IndivisibleClasses(int n, int c)
        : Error("n=" + std::to_string(n) + " not divisible by c=" + std::to_string(c)) {}
};

class EmptyTrainSet : public Error {
public:
    EmptyTrainSet() : Error("train mask selects no nodes") {}
};

class MissingClassInTrain : public Error {
public:
    explicit MissingClassInTrain(int c) : Error("class " + std::to_string(c) + " absent from train mask") {}
};

class NotRecoverable : public Error {
public:
    NotRecoverable() : Error("ideal features do not recover the labels (class means collide)") {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& file, std::size_t line, const std::string& what)
        : Error(file + ":" + std::to_string(line) + ": " + what) {}
    explicit ParseError(const std::string& what) : Error(what) {}
};

class InconsistentNodeCount : public Error {
public:
    explicit InconsistentNodeCount(const std::string& what) : Error(what) {}
};

class ShapeMismatch : public Error {
public:
    explicit ShapeMismatch(const std::string& what) : Error(what) {}
};

class ConvergenceFailure : public Error {
public:
    explicit ConvergenceFailure(const std::string& what) : Error(what) {}
};

}  // namespace sggnn
