#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace bicascade::detail {

inline unsigned resolve_threads(unsigned requested)
{
    if (requested != 0)
        return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Runs fn(i) for every i in [0, count); work items are pulled from a shared counter.
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn)
{
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto body = [&] {
        try {
            for (std::size_t i = next++; i < count; i = next++)
                fn(i);
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure)
                failure = std::current_exception();
            next = count;
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back(body);
    for (auto& th : pool)
        th.join();
    if (failure)
        std::rethrow_exception(failure);
}

/// Neumaier-compensated sum.
class CompensatedSum {
public:
    void add(double x)
    {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Welford running moments; merge() combines chunks (Chan et al.).
class RunningStats {
public:
    void add(double x)
    {
        ++n_;
        const double delta = x - mean_;
        mean_ += delta / static_cast<double>(n_);
        m2_ += delta * (x - mean_);
    }

    void merge(const RunningStats& other)
    {
        if (other.n_ == 0)
            return;
        if (n_ == 0) {
            *this = other;
            return;
        }
        const double total = static_cast<double>(n_ + other.n_);
        const double delta = other.mean_ - mean_;
        mean_ += delta * static_cast<double>(other.n_) / total;
        m2_ += other.m2_ + delta * delta * static_cast<double>(n_) * static_cast<double>(other.n_) / total;
        n_ += other.n_;
    }

    std::size_t count() const { return n_; }
    double mean() const { return mean_; }
    double std_error() const
    {
        if (n_ < 2)
            return 0.0;
        const double var = std::max(0.0, m2_ / static_cast<double>(n_ - 1));
        return std::sqrt(var / static_cast<double>(n_));
    }

private:
    std::size_t n_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

/// Fixed-size sample chunks so results are independent of the worker count.
inline constexpr std::size_t mc_chunk = 4096;

/// make_sampler() builds a callable double(sample_index) owning its scratch space; one per chunk.
template <class MakeSampler>
RunningStats chunked_samples(std::size_t samples, unsigned threads, MakeSampler&& make_sampler)
{
    const std::size_t chunks = (samples + mc_chunk - 1) / mc_chunk;
    std::vector<RunningStats> parts(chunks);
    parallel_for(chunks, threads, [&](std::size_t c) {
        const std::size_t begin = c * mc_chunk;
        const std::size_t end = std::min(samples, begin + mc_chunk);
        auto sample = make_sampler();
        RunningStats local;
        for (std::size_t i = begin; i < end; ++i)
            local.add(sample(i));
        parts[c] = local;
    });
    RunningStats total;
    for (const auto& part : parts)
        total.merge(part);
    return total;
}

} // namespace bicascade::detail
