"""
Purpose
----
Define the parameter classes of a beyond-CMOS technology (device, magnet,
spin channel, interconnect) and load them from a JSON device library.

Usage
----
from xcmosbench.base.devicelib import load_device_library

lib = load_device_library()          # shipped default (or $XCMOS_LIB)
dev = lib['CMOS-HP']

Author
----
xcmosbench developers

Dates
----
2026-10-16

References
----
Device library format: one object per device, SI units, every numeric
field carrying a sibling "<field>_provenance" tag ("paper" or
"placeholder").

License
----
MIT License

Copyright (c) 2026      xcmosbench developers

Permission is hereby granted, free of charge, to any person obtaining a copy
of this software and associated documentation files (the "Software"), to deal
in the Software without restriction, including without limitation the rights
to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
copies of the Software, and to permit persons to whom the Software is
furnished to do so, subject to the following conditions:

The above copyright notice and this permission notice shall be included in all
copies or substantial portions of the Software.

THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
SOFTWARE.
"""

import copy
import json
import logging
import math
import os
from pathlib import Path

import jsonschema
import numpy as np

from .constants import (K_B,
                        T_ROOM,
                        THERMAL_STABILITY_MIN,
                        THERMAL_STABILITY_RTOL)
from .enums import (AnisotropyKind,
                    CHANNEL_CLASSES,
                    CNN_KIND_CLASSES,
                    CnnKind,
                    DeviceClass,
                    MAGNET_CLASSES,
                    VARIANT_ENUMS)
from .errors import (ClassMismatchError,
                     InvalidParameterError,
                     LibraryParseError,
                     LibraryValidationError)

lgr = logging.getLogger(__name__)

DEFAULT_LIBRARY_PATH = Path(__file__).parent / 'data' / 'default_library.json'
LIBRARY_ENV_VAR = 'XCMOS_LIB'
PROVENANCE_TAGS = ['paper', 'placeholder']
CNN_MODEL_KINDS = [k.value for k in CnnKind]

_MISSING = object()


def _check(condition, msg, device, field):
    if not condition:
        raise LibraryValidationError(msg, device=device, field=field)


class _Params(object):
    """
    Parameter sets are treated as immutable: use replace() to get a
    modified copy.
    """

    def __eq__(self, other):
        if isinstance(other, self.__class__):
            return self.__dict__ == other.__dict__
        else:
            return False

    def __repr__(self):
        fields = ', '.join(
            '{k}={v!r}'.format(k=k, v=v) for k, v in self.__dict__.items()
        )
        return '{c}({f})'.format(c=self.__class__.__name__, f=fields)

    def replace(self, **changes):
        """
        Returns a copy of the object with the given attributes changed
        """
        new = copy.deepcopy(self)
        for key, value in changes.items():
            if key not in new.__dict__:
                raise AttributeError(
                    '{c} has no field "{k}"'.format(c=self.__class__.__name__, k=key)
                )
            setattr(new, key, value)
        return new


class MagnetParams(_Params):
    """
    Free magnet of a spintronic device

    Members:
    --------
    M_s : float
        saturation magnetization (A/m)
    K_u : float
        uniaxial anisotropy energy density (J/m^3). For in-plane magnets
        this is the effective barrier, shape anisotropy included.
    alpha : float
        Gilbert damping
    eta : float
        spin injection/detection polarization, in (0, 1]
    dims : tuple of 3 floats
        (length, width, thickness), in m
    T : float
        operating temperature (K)
    anisotropy_kind : AnisotropyKind
    """

    def __init__(
            self,
            M_s,
            K_u,
            alpha,
            eta,
            dims,
            T=T_ROOM,
            anisotropy_kind=AnisotropyKind.InPlane
            ):
        self.M_s = float(M_s)
        self.K_u = float(K_u)
        self.alpha = float(alpha)
        self.eta = float(eta)
        self.dims = tuple(float(d) for d in dims)
        self.T = float(T)
        self.anisotropy_kind = AnisotropyKind(anisotropy_kind)

    @property
    def volume(self):
        return float(np.prod(self.dims))

    @property
    def thermal_stability(self):
        """
        Delta = K_u * V / (k_B * T)
        """
        return self.K_u * self.volume / (K_B * self.T)

    def scaled(self, factor):
        """
        Returns a copy with the volume scaled by 'factor' (the length
        of the magnet is stretched, the cross section is kept)
        """
        length, width, thickness = self.dims
        return self.replace(dims=(length * factor, width, thickness))

    def validate(self, device=None):
        _check(self.M_s > 0, 'M_s must be positive', device, 'magnet.M_s')
        _check(self.K_u > 0, 'K_u must be positive', device, 'magnet.K_u')
        _check(0 < self.alpha < 1, 'alpha must be in (0, 1)', device, 'magnet.alpha')
        _check(0 < self.eta <= 1, 'eta must be in (0, 1]', device, 'magnet.eta')
        _check(len(self.dims) == 3 and all(d > 0 for d in self.dims),
               'all three dims must be positive', device, 'magnet.dims')
        _check(self.T > 0, 'T must be positive', device, 'magnet.T')
        _check(
            self.thermal_stability >= THERMAL_STABILITY_MIN * (1 - THERMAL_STABILITY_RTOL),
            'thermal stability {d:.4g} is below {m:g}'.format(
                d=self.thermal_stability, m=THERMAL_STABILITY_MIN),
            device,
            'magnet.K_u'
        )
        return self


class SpinChannelParams(_Params):
    """
    Non-magnetic spin transport channel (ASL) or spin-Hall write path (CSL)

    Members:
    --------
    beta : float
        spin injection coefficient, in (0, 1]
    l_sf : float
        spin diffusion length (m)
    l_c : float
        channel length, injector to output magnet (m)
    l_g : float
        ground path length (m)
    rho : float
        channel resistivity (Ohm*m)
    cross_section : float
        channel cross section (m^2)
    """

    def __init__(
            self,
            beta,
            l_sf,
            l_c,
            l_g,
            rho,
            cross_section
            ):
        self.beta = float(beta)
        self.l_sf = float(l_sf)
        self.l_c = float(l_c)
        self.l_g = float(l_g)
        self.rho = float(rho)
        self.cross_section = float(cross_section)

    @property
    def resistance(self):
        """
        Resistance of the channel from injector to output magnet
        """
        return self.rho * self.l_c / self.cross_section

    def validate(self, device=None):
        _check(0 < self.beta <= 1, 'beta must be in (0, 1]', device, 'channel.beta')
        for field in ['l_sf', 'l_c', 'l_g', 'rho', 'cross_section']:
            _check(getattr(self, field) > 0,
                   '{f} must be positive'.format(f=field), device, 'channel.' + field)
        return self


class DeviceParams(_Params):
    """
    One technology: electrical parameters of a minimum device, plus the
    class-specific magnet, channel and scalar extras.

    Members:
    --------
    name : str
    device_class : DeviceClass
    V_dd : float
        supply voltage (V)
    I_on, I_off : float
        ON and OFF current per device at V_dd (A)
    C_gate : float
        input capacitance per device (F)
    A_dev : float
        footprint of a minimum device (m^2)
    t_p : float
        extra polarization switching time (s), 0 for non-ferroelectrics
    variant : CslVariant, MemtjVariant or None
    magnet : MagnetParams or None
    channel : SpinChannelParams or None
    extras : dict
        class-specific scalars (str -> float)
    provenance : dict
        field -> 'paper' or 'placeholder' (nested fields are dotted,
        e.g. 'magnet.K_u', 'extras.C_ME')
    """

    def __init__(
            self,
            name,
            device_class,
            V_dd,
            I_on,
            I_off,
            C_gate,
            A_dev,
            t_p=0.0,
            variant=None,
            magnet=None,
            channel=None,
            extras=None,
            provenance=None
            ):
        self.name = name
        self.device_class = DeviceClass(device_class)
        self.V_dd = float(V_dd)
        self.I_on = float(I_on)
        self.I_off = float(I_off)
        self.C_gate = float(C_gate)
        self.A_dev = float(A_dev)
        self.t_p = float(t_p)
        variant_enum = VARIANT_ENUMS.get(self.device_class)
        if variant_enum is None:
            self.variant = variant
        elif variant is None:
            # first member is the baseline variant
            self.variant = list(variant_enum)[0]
        else:
            self.variant = variant_enum(variant)
        self.magnet = magnet
        self.channel = channel
        self.extras = dict(extras) if extras else {}
        self.provenance = dict(provenance) if provenance else {}

    def extra(self, key, default=_MISSING):
        """
        Returns the class-specific parameter 'key'. If it is missing and
        no default is given, raises InvalidParameterError.
        """
        if key in self.extras:
            return self.extras[key]
        if default is _MISSING:
            raise InvalidParameterError(
                'Device %r is missing the "{k}" parameter'.format(k=key),
                self.name
            )
        return default

    def require_class(self, *classes):
        """
        Raises ClassMismatchError unless the device belongs to one of 'classes'
        """
        if self.device_class not in classes:
            raise ClassMismatchError(
                'Wrong device class for %r',
                self.name,
                expStr=' or '.join(c.value for c in classes),
                gotStr=self.device_class.value
            )

    def validate(self):
        name = self.name
        _check(self.V_dd > 0, 'V_dd must be positive', name, 'V_dd')
        _check(self.I_off >= 0, 'I_off must be nonnegative', name, 'I_off')
        _check(self.I_on > self.I_off, 'I_on must exceed I_off', name, 'I_on')
        _check(self.C_gate > 0, 'C_gate must be positive', name, 'C_gate')
        _check(self.A_dev > 0, 'A_dev must be positive', name, 'A_dev')
        _check(self.t_p >= 0, 't_p must be nonnegative', name, 't_p')
        if self.device_class not in VARIANT_ENUMS:
            _check(self.variant is None,
                   'variant tags only apply to CSL and MEMTJ devices', name, 'variant')
        if self.device_class in MAGNET_CLASSES:
            _check(self.magnet is not None,
                   '{c} devices require a magnet'.format(c=self.device_class.value),
                   name, 'magnet')
        if self.device_class in CHANNEL_CLASSES:
            _check(self.channel is not None,
                   '{c} devices require a channel'.format(c=self.device_class.value),
                   name, 'channel')
        if self.magnet is not None:
            self.magnet.validate(device=name)
        if self.channel is not None:
            self.channel.validate(device=name)
        for key, value in self.extras.items():
            _check(math.isfinite(value) or value == math.inf,
                   'extras must be numbers', name, 'extras.' + key)
        return self


class WireParams(_Params):
    """
    Interconnect per unit length: r_w (Ohm/m), c_w (F/m)
    """

    def __init__(self, r_w, c_w):
        self.r_w = float(r_w)
        self.c_w = float(c_w)

    def validate(self, device='interconnect'):
        _check(self.r_w > 0, 'r_w must be positive', device, 'wire.r_w')
        _check(self.c_w > 0, 'c_w must be positive', device, 'wire.c_w')
        return self


class RepeaterParams(_Params):
    """
    Minimum-sized repeater: output resistance R0 (Ohm), input capacitance
    C0 (F), extra polarization switching time t_p (s) and supply V_dd (V)
    """

    def __init__(self, R0, C0, t_p=0.0, V_dd=1.0):
        self.R0 = float(R0)
        self.C0 = float(C0)
        self.t_p = float(t_p)
        self.V_dd = float(V_dd)

    def validate(self, device='interconnect'):
        _check(self.R0 > 0, 'R0 must be positive', device, 'repeater.R0')
        _check(self.C0 > 0, 'C0 must be positive', device, 'repeater.C0')
        _check(self.V_dd > 0, 'V_dd must be positive', device, 'repeater.V_dd')
        _check(self.t_p >= 0, 't_p must be nonnegative', device, 'repeater.t_p')
        return self


class CnnModelEntry(_Params):
    """
    Named CNN cost model in a library: which device it is built from,
    which kind of implementation, and its cost extras.
    """

    def __init__(self, name, kind, device, extras=None):
        self.name = name
        self.kind = kind
        self.device = device
        self.extras = dict(extras) if extras else {}


class DeviceLibrary(object):
    """
    Collection of devices plus the interconnect defaults and the CNN
    cost models.
    """

    def __init__(
            self,
            devices=None,
            wire=None,
            repeater=None,
            cnn_models=None,
            path=None
            ):
        self.devices = list(devices) if devices else []
        self.wire = wire
        self.repeater = repeater
        self.cnn_models = list(cnn_models) if cnn_models else []
        self.path = path

    def __eq__(self, other):
        if isinstance(other, self.__class__):
            return self.__dict__ == other.__dict__
        else:
            return False

    def __len__(self):
        return len(self.devices)

    def __iter__(self):
        return iter(self.devices)

    def __getitem__(self, name):
        for dev in self.devices:
            if dev.name == name:
                return dev
        raise KeyError(name)

    def __contains__(self, name):
        return name in self.names()

    def names(self):
        """
        Returns a list with the names of all the devices
        """
        return [dev.name for dev in self.devices]

    def by_class(self, *classes):
        return [dev for dev in self.devices if dev.device_class in classes]

    @property
    def provenance(self):
        """
        Map (device name, field) -> provenance tag
        """
        return {
            (dev.name, field): tag
            for dev in self.devices
            for field, tag in dev.provenance.items()
        }

    def with_devices(self, devices):
        """
        Returns a library with the same interconnect and CNN sections
        but a different device list
        """
        new = copy.copy(self)
        new.devices = list(devices)
        return new

    def validate(self):
        names = self.names()
        for name in names:
            _check(names.count(name) == 1, 'duplicate device name', name, 'name')
        for dev in self.devices:
            dev.validate()
        if self.wire is not None:
            self.wire.validate()
        if self.repeater is not None:
            self.repeater.validate()
        for model in self.cnn_models:
            _check(model.device in names,
                   'unknown device "{d}"'.format(d=model.device),
                   model.name, 'device')
            allowed = CNN_KIND_CLASSES[CnnKind(model.kind)]
            _check(self[model.device].device_class in allowed,
                   'a {k} model cannot be built from a {c} device'.format(
                       k=model.kind, c=self[model.device].device_class.value),
                   model.name, 'kind')
        return self


###   Library file schema   ###

def _numbers_with_provenance(required, optional=()):
    """
    Schema of an object whose numeric fields each carry a
    "<field>_provenance" sibling
    """
    properties = {}
    for field in list(required) + list(optional):
        properties[field] = {'type': 'number'}
        properties[field + '_provenance'] = {'enum': PROVENANCE_TAGS}
    return {
        'type': 'object',
        'properties': properties,
        'required': list(required),
        'additionalProperties': False,
    }


_MAGNET_SCHEMA = _numbers_with_provenance(['M_s', 'K_u', 'alpha', 'eta'], ['T'])
_MAGNET_SCHEMA['properties']['dims'] = {
    'type': 'array', 'items': {'type': 'number'}, 'minItems': 3, 'maxItems': 3
}
_MAGNET_SCHEMA['properties']['dims_provenance'] = {'enum': PROVENANCE_TAGS}
_MAGNET_SCHEMA['properties']['anisotropy_kind'] = {'enum': [a.value for a in AnisotropyKind]}
_MAGNET_SCHEMA['required'].append('dims')

_CHANNEL_SCHEMA = _numbers_with_provenance(
    ['beta', 'l_sf', 'l_c', 'l_g', 'rho', 'cross_section']
)

_EXTRAS_SCHEMA = {
    'type': 'object',
    'patternProperties': {
        '^[A-Za-z][A-Za-z0-9_]*_provenance$': {'enum': PROVENANCE_TAGS},
        '^(?![A-Za-z0-9_]*_provenance$)[A-Za-z][A-Za-z0-9_]*$': {'type': 'number'},
    },
    'additionalProperties': False,
}

_DEVICE_SCHEMA = _numbers_with_provenance(
    ['V_dd', 'I_on', 'I_off', 'C_gate', 'A_dev'], ['t_p']
)
_DEVICE_SCHEMA['properties'].update({
    'name': {'type': 'string', 'minLength': 1},
    'class': {'enum': [c.value for c in DeviceClass]},
    'variant': {'type': ['string', 'null']},
    'description': {'type': 'string'},
    'magnet': _MAGNET_SCHEMA,
    'channel': _CHANNEL_SCHEMA,
    'extras': _EXTRAS_SCHEMA,
})
_DEVICE_SCHEMA['required'] = ['name', 'class'] + _DEVICE_SCHEMA['required']

_CNN_MODEL_SCHEMA = {
    'type': 'object',
    'properties': {
        'name': {'type': 'string', 'minLength': 1},
        'kind': {'enum': CNN_MODEL_KINDS},
        'device': {'type': 'string'},
        'description': {'type': 'string'},
        'extras': _EXTRAS_SCHEMA,
    },
    'required': ['name', 'kind', 'device'],
    'additionalProperties': False,
}

LIBRARY_SCHEMA = {
    '$schema': 'http://json-schema.org/draft-07/schema#',
    'title': 'xcmosbench device library',
    'type': 'object',
    'properties': {
        'description': {'type': 'string'},
        'devices': {'type': 'array', 'items': _DEVICE_SCHEMA},
        'interconnect': {
            'type': 'object',
            'properties': {
                'wire': _numbers_with_provenance(['r_w', 'c_w']),
                'repeater': _numbers_with_provenance(['R0', 'C0', 'V_dd'], ['t_p']),
            },
            'additionalProperties': False,
        },
        'cnn_models': {'type': 'array', 'items': _CNN_MODEL_SCHEMA},
    },
    'required': ['devices'],
    'additionalProperties': False,
}


def _json_path(path_items):
    """
    ['devices', 3, 'magnet', 'K_u'] -> 'devices[3].magnet.K_u'
    """
    where = ''
    for item in path_items:
        if isinstance(item, int):
            where += '[{i}]'.format(i=item)
        else:
            where += ('.' if where else '') + str(item)
    return where or '<root>'


def _check_provenance(obj, where, libFile):
    """
    Every numeric field must carry a "<field>_provenance" sibling, and
    every provenance tag must belong to a field.  Recurses into nested
    objects.  Returns the map field -> tag (nested fields dotted).
    """
    tags = {}
    for key, value in obj.items():
        here = '{w}.{k}'.format(w=where, k=key) if where else key
        if isinstance(value, dict):
            for subkey, tag in _check_provenance(value, here, libFile).items():
                tags[key + '.' + subkey] = tag
        elif key.endswith('_provenance'):
            field = key[:-len('_provenance')]
            if field not in obj:
                raise LibraryParseError(
                    'provenance tag without a "{f}" field'.format(f=field), libFile, here
                )
            tags[field] = value
        elif isinstance(value, bool):
            continue
        elif isinstance(value, (int, float)) or (
                isinstance(value, list) and value and
                all(isinstance(v, (int, float)) for v in value)):
            if key + '_provenance' not in obj:
                raise LibraryParseError(
                    'missing "{k}_provenance"'.format(k=key), libFile, here
                )
    return tags


def _magnet_from_dict(d):
    return MagnetParams(
        M_s=d['M_s'],
        K_u=d['K_u'],
        alpha=d['alpha'],
        eta=d['eta'],
        dims=d['dims'],
        T=d.get('T', T_ROOM),
        anisotropy_kind=d.get('anisotropy_kind', AnisotropyKind.InPlane.value),
    )


def _channel_from_dict(d):
    return SpinChannelParams(
        beta=d['beta'],
        l_sf=d['l_sf'],
        l_c=d['l_c'],
        l_g=d['l_g'],
        rho=d['rho'],
        cross_section=d['cross_section'],
    )


def _strip_provenance(d):
    return {k: v for k, v in d.items() if not k.endswith('_provenance')}


def device_from_dict(d, provenance=None):
    """
    Builds a DeviceParams from one (schema-valid) library entry
    """
    try:
        return DeviceParams(
            name=d['name'],
            device_class=d['class'],
            V_dd=d['V_dd'],
            I_on=d['I_on'],
            I_off=d['I_off'],
            C_gate=d['C_gate'],
            A_dev=d['A_dev'],
            t_p=d.get('t_p', 0.0),
            variant=d.get('variant'),
            magnet=_magnet_from_dict(d['magnet']) if 'magnet' in d else None,
            channel=_channel_from_dict(d['channel']) if 'channel' in d else None,
            extras=_strip_provenance(d.get('extras', {})),
            provenance=provenance,
        )
    except ValueError as e:
        # unknown enum tag, e.g. a wrong variant for the device class
        raise LibraryValidationError(str(e), device=d.get('name'), field='variant')


def resolve_library_path(path=None):
    """
    --library argument, else $XCMOS_LIB, else the shipped default library
    """
    if path:
        return Path(path)
    env_path = os.environ.get(LIBRARY_ENV_VAR)
    if env_path:
        return Path(env_path)
    return DEFAULT_LIBRARY_PATH


def read_json_file(path, schema):
    """
    Reads a JSON file and checks it against 'schema'.  Syntax and schema
    errors are raised as LibraryParseError with the line or field.
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError('{i} file not found'.format(i=path))

    with open(path) as f:
        text = f.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise LibraryParseError(
            e.msg, path, 'line {l} column {c}'.format(l=e.lineno, c=e.colno)
        )

    validator = jsonschema.Draft7Validator(schema)
    errors = sorted(
        validator.iter_errors(data),
        key=lambda err: [str(p) for p in err.absolute_path]
    )
    if errors:
        err = errors[0]
        raise LibraryParseError(err.message, path, _json_path(err.absolute_path))

    return data


def load_device_library(path=None):
    """
    Function to read a device library file and return the validated
    library.

    Parameters
    ----------
    path : str or Path or None
        library file. If None, $XCMOS_LIB or the shipped default is used

    Returns
    -------
    library : DeviceLibrary
        All device invariants are checked eagerly
    """
    path = resolve_library_path(path)
    data = read_json_file(path, LIBRARY_SCHEMA)

    devices = []
    for i, d in enumerate(data['devices']):
        tags = _check_provenance(d, 'devices[{i}]'.format(i=i), path)
        devices.append(device_from_dict(d, provenance=tags))

    wire = repeater = None
    interconnect = data.get('interconnect', {})
    _check_provenance(interconnect, 'interconnect', path)
    if 'wire' in interconnect:
        wire = WireParams(**_strip_provenance(interconnect['wire']))
    if 'repeater' in interconnect:
        repeater = RepeaterParams(**_strip_provenance(interconnect['repeater']))

    cnn_models = []
    for i, m in enumerate(data.get('cnn_models', [])):
        _check_provenance(m.get('extras', {}), 'cnn_models[{i}].extras'.format(i=i), path)
        cnn_models.append(CnnModelEntry(
            name=m['name'],
            kind=m['kind'],
            device=m['device'],
            extras=_strip_provenance(m.get('extras', {})),
        ))

    library = DeviceLibrary(
        devices=devices,
        wire=wire,
        repeater=repeater,
        cnn_models=cnn_models,
        path=path
    )
    library.validate()
    lgr.info('Loaded {n} devices from {p}'.format(n=len(library), p=path))
    return library
