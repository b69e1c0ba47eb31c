#pragma once

namespace skewrec {

/// Selects between the OpenMP kernel and the same loop run on one thread.
/// Both produce identical results; the serial form is the reference.
enum class Execution { serial, parallel };

}  // namespace skewrec
