#include "wrt/summation.hpp"

#include <atomic>
#include <thread>

namespace wrt {

Complex compensated_sum(const std::vector<Complex>& terms, std::size_t chunk_size) {
    if (chunk_size == 0) throw validation_error("compensated_sum: chunk_size must be positive");
    mpfr_prec_t prec = kDefaultPrec;
    for (const auto& t : terms)
        if (t.prec() > prec) prec = t.prec();
    if (terms.empty()) return Complex(prec);

    const mpfr_prec_t acc_prec = prec + kSumGuardBits;
    Complex total(acc_prec);
    for (std::size_t base = 0; base < terms.size(); base += chunk_size) {
        std::size_t end = std::min(terms.size(), base + chunk_size);
        Complex partial(acc_prec);
        for (std::size_t i = base; i < end; ++i) {
            mpfr_add(partial.re.raw(), partial.re.raw(), terms[i].re.raw(), MPFR_RNDN);
            mpfr_add(partial.im.raw(), partial.im.raw(), terms[i].im.raw(), MPFR_RNDN);
        }
        total += partial;
    }
    return {total.re.rounded(prec), total.im.rounded(prec)};
}

Complex chunked_parallel_sum(
    std::uint64_t count, std::size_t chunk_size, mpfr_prec_t result_prec,
    const std::function<void(std::uint64_t, std::uint64_t, Complex&)>& fill,
    unsigned threads) {
    if (chunk_size == 0) throw validation_error("chunked_parallel_sum: chunk_size must be positive");
    const mpfr_prec_t acc_prec = result_prec + kSumGuardBits;
    const std::uint64_t n_chunks = count == 0 ? 0 : (count - 1) / chunk_size + 1;
    std::vector<Complex> partials(static_cast<std::size_t>(n_chunks), Complex(acc_prec));

    if (threads <= 1 || n_chunks <= 1) {
        for (std::uint64_t c = 0; c < n_chunks; ++c)
            fill(c * chunk_size, std::min<std::uint64_t>(count, (c + 1) * chunk_size),
                 partials[static_cast<std::size_t>(c)]);
    } else {
        std::atomic<std::uint64_t> next{0};
        auto worker = [&]() {
            for (;;) {
                std::uint64_t c = next.fetch_add(1);
                if (c >= n_chunks) break;
                fill(c * chunk_size, std::min<std::uint64_t>(count, (c + 1) * chunk_size),
                     partials[static_cast<std::size_t>(c)]);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    Complex total(acc_prec);
    for (const auto& p : partials) total += p;  // fixed chunk order
    return {total.re.rounded(result_prec), total.im.rounded(result_prec)};
}

unsigned default_thread_count() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

}  // namespace wrt
