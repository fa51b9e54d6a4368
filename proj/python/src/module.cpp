#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "hppk/codec.hpp"
#include "hppk/drbg.hpp"
#include "hppk/ds.hpp"
#include "hppk/error.hpp"
#include "hppk/kem.hpp"

namespace py = pybind11;
using namespace hppk;

namespace {

using Bytes = std::vector<std::uint8_t>;

Level level_of(int level) {
  switch (level) {
    case 1: return Level::I;
    case 3: return Level::III;
    case 5: return Level::V;
  }
  throw Error(Errc::InvalidParams, "level must be 1, 3 or 5");
}

std::span<const std::uint8_t> view(const py::bytes& b) {
  const std::string_view s = b;
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

py::bytes to_py(std::span<const std::uint8_t> b) {
  return py::bytes(reinterpret_cast<const char*>(b.data()), b.size());
}

Drbg drbg(const std::optional<py::bytes>& seed) {
  if (!seed) return Drbg(Drbg::random_seed());
  return Drbg(view(*seed));
}

}  // namespace

PYBIND11_MODULE(_hppk, m) {
  m.doc() = "Byte-level bindings for the hppk KEM and signature";

  py::register_exception<Error>(m, "HppkError", PyExc_ValueError);

  m.def(
      "kem_sizes",
      [](int level, std::size_t msize, std::size_t rings) {
        const auto s = codec::kem_sizes(kem_params(level_of(level), msize, rings));
        return py::dict(py::arg("public_key") = s.public_key, py::arg("private_key") = s.private_key,
                        py::arg("ciphertext") = s.ciphertext);
      },
      py::arg("level") = 1, py::arg("m") = 2, py::arg("rings") = 2);

  m.def(
      "ds_sizes",
      [](int level, std::size_t msize, std::size_t extra) {
        const auto s = codec::ds_sizes(ds_params(level_of(level), msize, extra));
        return py::dict(py::arg("public_key") = s.public_key, py::arg("private_key") = s.private_key,
                        py::arg("signature") = s.signature);
      },
      py::arg("level") = 1, py::arg("m") = 1, py::arg("barrett_extra") = 64);

  m.def(
      "kem_keygen",
      [](int level, std::size_t msize, std::size_t rings, std::optional<py::bytes> seed) {
        const auto params = kem_params(level_of(level), msize, rings);
        auto g = drbg(seed);
        const auto kp = kem::keygen(params, g);
        return py::make_tuple(to_py(codec::encode(kp.pk, params)), to_py(codec::encode(kp.sk, params)));
      },
      py::arg("level") = 1, py::arg("m") = 2, py::arg("rings") = 2, py::arg("seed") = py::none(),
      "Returns (public_key, private_key).");

  m.def(
      "kem_encaps",
      [](py::bytes pk, int level, std::size_t msize, std::size_t rings, std::optional<py::bytes> seed) {
        const auto params = kem_params(level_of(level), msize, rings);
        const auto key = codec::decode_kem_public_key(view(pk), params);
        auto g = drbg(seed);
        const auto enc = kem::encapsulate(key, params, g);
        return py::make_tuple(to_py(codec::encode(enc.ct, params)), to_py(enc.ss));
      },
      py::arg("public_key"), py::arg("level") = 1, py::arg("m") = 2, py::arg("rings") = 2,
      py::arg("seed") = py::none(), "Returns (ciphertext, shared_secret).");

  m.def(
      "kem_decaps",
      [](py::bytes sk, py::bytes ct, int level, std::size_t msize, std::size_t rings) {
        const auto params = kem_params(level_of(level), msize, rings);
        const auto key = codec::decode_kem_private_key(view(sk), params);
        const auto c = codec::decode_kem_ciphertext(view(ct), params);
        return to_py(kem::decapsulate(key, params, c));
      },
      py::arg("private_key"), py::arg("ciphertext"), py::arg("level") = 1, py::arg("m") = 2,
      py::arg("rings") = 2);

  m.def(
      "ds_keygen",
      [](int level, std::size_t msize, std::size_t extra, std::optional<py::bytes> seed) {
        const auto params = ds_params(level_of(level), msize, extra);
        auto g = drbg(seed);
        const auto kp = ds::keygen(params, g);
        return py::make_tuple(to_py(codec::encode(kp.pk, params)), to_py(codec::encode(kp.sk, params)));
      },
      py::arg("level") = 1, py::arg("m") = 1, py::arg("barrett_extra") = 64, py::arg("seed") = py::none(),
      "Returns (public_key, private_key).");

  m.def(
      "ds_sign",
      [](py::bytes sk, py::bytes msg, int level, std::size_t msize, std::size_t extra) {
        const auto params = ds_params(level_of(level), msize, extra);
        const auto key = codec::decode_ds_private_key(view(sk), params);
        return to_py(codec::encode(ds::sign(key, params, view(msg)), params));
      },
      py::arg("private_key"), py::arg("message"), py::arg("level") = 1, py::arg("m") = 1,
      py::arg("barrett_extra") = 64);

  m.def(
      "ds_verify",
      [](py::bytes pk, py::bytes msg, py::bytes sig, int level, std::size_t msize, std::size_t extra) {
        const auto params = ds_params(level_of(level), msize, extra);
        const auto key = codec::decode_ds_public_key(view(pk), params);
        const auto s = codec::decode_ds_signature(view(sig), params);
        return ds::verify(key, params, view(msg), s);
      },
      py::arg("public_key"), py::arg("message"), py::arg("signature"), py::arg("level") = 1, py::arg("m") = 1,
      py::arg("barrett_extra") = 64,
      "True if the signature verifies. Malformed encodings raise HppkError.");
}
