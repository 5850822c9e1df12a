#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace unmixed {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An edge-list line declared an edge from a vertex to itself.
class SelfLoopError : public Error {
public:
    explicit SelfLoopError(std::string vertex)
        : Error("self-loop on vertex '" + vertex + "'"), vertex_(std::move(vertex)) {}
    const std::string& vertex() const { return vertex_; }

private:
    std::string vertex_;
};

/// An edge-list line had more than two tokens.
class MalformedLineError : public Error {
public:
    explicit MalformedLineError(int line)
        : Error("malformed edge-list line " + std::to_string(line) +
                ": expected one or two vertex names"),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// A vertex index was out of range for the graph it was used with.
class UnknownVertexError : public Error {
public:
    using Error::Error;
};

/// The matching handed to the König construction admits an augmenting path.
class NotMaximumError : public Error {
public:
    using Error::Error;
};

/// The operation requires a perfect matching and the given one is not.
class NotPerfectError : public Error {
public:
    using Error::Error;
};

/// The graph is not a tree (disconnected or |E| != |V|-1).
class NotATreeError : public Error {
public:
    using Error::Error;
};

/// The tree has fewer than three vertices.
class TooSmallError : public Error {
public:
    using Error::Error;
};

/// The triple's defining adjacencies do not hold on the given graph.
class InvalidTripleError : public Error {
public:
    using Error::Error;
};

/// The relation matrix is missing a diagonal entry. Index is 1-based.
class NotReflexiveError : public Error {
public:
    explicit NotReflexiveError(int index)
        : Error("relation is not reflexive at index " + std::to_string(index)),
          index_(index) {}
    int index() const { return index_; }

private:
    int index_;
};

/// The relation matrix has rel[i][j] and rel[j][k] but not rel[i][k]. 1-based.
class NotTransitiveError : public Error {
public:
    NotTransitiveError(int i, int j, int k)
        : Error("relation is not transitive: (" + std::to_string(i) + "," +
                std::to_string(j) + ") and (" + std::to_string(j) + "," +
                std::to_string(k) + ") related but not (" + std::to_string(i) +
                "," + std::to_string(k) + ")"),
          i_(i), j_(j), k_(k) {}
    int i() const { return i_; }
    int j() const { return j_; }
    int k() const { return k_; }

private:
    int i_, j_, k_;
};

/// The graph exceeds the brute-force enumeration cap.
class TooLargeError : public Error {
public:
    TooLargeError(std::size_t vertices, std::size_t cap)
        : Error("graph has " + std::to_string(vertices) +
                " vertices, above the enumeration cap of " + std::to_string(cap)),
          vertices_(vertices), cap_(cap) {}
    std::size_t vertices() const { return vertices_; }
    std::size_t cap() const { return cap_; }

private:
    std::size_t vertices_;
    std::size_t cap_;
};

}  // namespace unmixed
