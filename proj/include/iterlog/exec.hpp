#pragma once

namespace iterlog {

// Selects between the OpenMP kernel and its serial reference.
enum class Exec { serial, parallel };

}  // namespace iterlog
