#ifndef MONSCHED_EXEC_HPP
#define MONSCHED_EXEC_HPP

namespace monsched {

// Every data-parallel kernel takes one of these. The serial path is the
// reference implementation; both paths must produce identical results.
enum class Exec { serial, parallel };

// Thin wrappers so callers need not include omp.h.
void set_thread_count(int threads);
int thread_count();

}  // namespace monsched

#endif  // MONSCHED_EXEC_HPP
