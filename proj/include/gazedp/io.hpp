#ifndef GAZEDP_IO_HPP
#define GAZEDP_IO_HPP

#include <cstdio>
#include <fstream>
#include <functional>
#include <string>

#include "gazedp/errors.hpp"

namespace gazedp {

/// Writes via a temp file renamed into place on success, so failed runs
/// leave no partial output behind.
inline void atomic_write(const std::string& path,
                         const std::function<void(std::ostream&)>& body) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::io_error, "cannot open '" + tmp + "' for writing");
    body(out);
    out.flush();
    if (!out) {
      std::remove(tmp.c_str());
      throw Error(Errc::io_error, "write to '" + tmp + "' failed");
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw Error(Errc::io_error, "cannot rename '" + tmp + "' to '" + path + "'");
  }
}

}  // namespace gazedp

#endif  // GAZEDP_IO_HPP
