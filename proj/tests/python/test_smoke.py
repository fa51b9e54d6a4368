import hashlib

import pytest

import hppk

SEED = bytes(32)


@pytest.mark.parametrize("level", [1, 3, 5])
@pytest.mark.parametrize("m", [2, 3])
@pytest.mark.parametrize("rings", [1, 2])
def test_kem_round_trip(level, m, rings):
    pk, sk = hppk.kem_keygen(level, m, rings)
    sizes = hppk.kem_sizes(level, m, rings)
    assert len(pk) == sizes["public_key"]
    assert len(sk) == sizes["private_key"]
    ct, ss = hppk.kem_encaps(pk, level, m, rings)
    assert len(ct) == sizes["ciphertext"]
    assert len(ss) == 32
    assert hppk.kem_decaps(sk, ct, level, m, rings) == ss


def test_kem_seeded_keygen_is_deterministic():
    assert hppk.kem_keygen(seed=SEED) == hppk.kem_keygen(seed=SEED)
    assert hppk.kem_keygen(seed=SEED) != hppk.kem_keygen(seed=b"\x01" * 32)


def test_known_sizes():
    assert hppk.kem_sizes(1, 2, 1) == {"public_key": 108, "private_key": 43, "ciphertext": 224}
    assert hppk.ds_sizes(5) == {"public_key": 380, "private_key": 200, "signature": 272}


@pytest.mark.parametrize("level", [1, 3, 5])
def test_ds_sign_verify(level):
    pk, sk = hppk.ds_keygen(level, seed=hashlib.sha256(b"ds").digest())
    msg = b"attack at dawn"
    sig = hppk.ds_sign(sk, msg, level)
    assert len(sig) == hppk.ds_sizes(level)["signature"]
    assert hppk.ds_verify(pk, msg, sig, level)
    assert not hppk.ds_verify(pk, b"attack at dusk", sig, level)
    tampered = bytearray(sig)
    tampered[0] ^= 1
    assert not hppk.ds_verify(pk, msg, bytes(tampered), level)


def test_errors():
    pk, _ = hppk.kem_keygen()
    with pytest.raises(hppk.HppkError, match="LengthMismatch"):
        hppk.kem_encaps(pk[:-1])
    with pytest.raises(hppk.HppkError):
        hppk.kem_keygen(level=2)
    with pytest.raises(hppk.HppkError, match="InvalidParams"):
        hppk.kem_keygen(m=1)
    with pytest.raises(hppk.HppkError):
        hppk.kem_keygen(seed=b"short")
    with pytest.raises(ValueError):
        hppk.ds_verify(b"", b"", b"")
