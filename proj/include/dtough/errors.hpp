#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dtough {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class CollinearInput : public Error
{
public:
    CollinearInput() : Error("collinear input") {}
};

class PreconditionViolated : public Error
{
public:
    using Error::Error;
};

class TooFewPoints : public Error
{
public:
    explicit TooFewPoints(std::size_t n)
        : Error("too few points: " + std::to_string(n))
    {}
};

class TooLarge : public Error
{
public:
    TooLarge(std::size_t n, std::size_t limit)
        : Error("instance of size " + std::to_string(n) + " exceeds limit " +
                std::to_string(limit))
        , size(n)
        , limit(limit)
    {}
    std::size_t size;
    std::size_t limit;
};

class NotInteriorEdge : public Error
{
public:
    NotInteriorEdge() : Error("edge is not an interior edge") {}
};

class NotAnEdge : public Error
{
public:
    NotAnEdge() : Error("pair of vertices is not an edge") {}
};

class WitnessSearchFailed : public Error
{
public:
    WitnessSearchFailed() : Error("no verified witness disk found") {}
};

class SearchExhausted : public Error
{
public:
    using Error::Error;
};

class NotIndependent : public Error
{
public:
    NotIndependent(int a, int b)
        : Error("vertex set is not independent: edge (" + std::to_string(a) +
                "," + std::to_string(b) + ")")
        , edge{a, b}
    {}
    std::vector<int> edge;
};

/// Two interior vertices reach the shrinking disk's boundary at the same
/// parameter. `vertices` lists every vertex of the tie.
class TieOnBoundary : public Error
{
public:
    TieOnBoundary(int anchor, std::vector<int> vertices)
        : Error("tie on shrinking disk boundary")
        , anchor(anchor)
        , vertices(std::move(vertices))
    {}
    int anchor;
    std::vector<int> vertices;
};

/// Raised when a property guaranteed by the theory fails to hold.
class InvariantBroken : public Error
{
public:
    using Error::Error;
};

class ConstructionFailed : public Error
{
public:
    using Error::Error;
};

} // namespace dtough
