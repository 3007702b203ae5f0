"""
Errors raised by the xcmosbench models and the device library loader.

All of them are ValueErrors: a model evaluated outside of its domain, or a
library file that does not describe valid devices.
"""


def errmsg(msg, source, expStr=None, gotStr=None):
    """
    Formats an error message.  '%r' in msg is replaced by repr(source)
    """
    msg = msg.replace('%r', repr(source))
    if expStr is not None and gotStr is not None:
        formattedMsg = '{msg}: Expected: {expStr}; got: {gotStr}'
        return formattedMsg.format(msg=msg, expStr=repr(expStr), gotStr=repr(gotStr))
    else:
        return msg


class BenchmarkError(ValueError):
    """
    Subclass of ValueError with the following additional properties:
    msg    : The unformatted error message
    source : What was being evaluated (device name, file, ...)
    expStr : What we expected
    gotStr : What we got instead
    """
    def __init__(self, msg, source=None, expStr=None, gotStr=None):
        ValueError.__init__(self, errmsg(msg, source, expStr, gotStr))
        self.msg = msg
        self.source = source
        self.expStr = expStr
        self.gotStr = gotStr

    def __reduce__(self):
        return self.__class__, (self.msg, self.source, self.expStr, self.gotStr)


class InvalidParameterError(BenchmarkError):
    pass


class ClassMismatchError(BenchmarkError):
    pass


class ThermalStabilityError(BenchmarkError):
    pass


class NoSwitchingError(BenchmarkError):
    pass


class DegenerateGeometryError(BenchmarkError):
    pass


class NoMotionError(BenchmarkError):
    pass


class StyleMismatchError(BenchmarkError):
    pass


class NotPipelinableError(BenchmarkError):
    pass


class UnknownMetricError(BenchmarkError):
    pass


class LibraryValidationError(BenchmarkError):
    """
    A library entry parsed fine but breaks a device invariant.
    device : name of the offending device
    field  : name of the offending field
    """
    def __init__(self, msg, device=None, field=None):
        BenchmarkError.__init__(
            self,
            '{d}: {f}: {m}'.format(d=device, f=field, m=msg)
        )
        self.msg = msg
        self.device = device
        self.field = field

    def __reduce__(self):
        return self.__class__, (self.msg, self.device, self.field)


class LibraryParseError(BenchmarkError):
    """
    A library (or netlist) file could not be parsed.
    libFile : path of the file
    where   : 'line L column C' for JSON syntax errors, or the path of
              the offending field for schema errors
    """
    def __init__(self, msg, libFile=None, where=None):
        fullMsg = '%r: ' + msg
        if where:
            fullMsg = fullMsg + ' (at {w})'.format(w=where)
        BenchmarkError.__init__(self, fullMsg, source=str(libFile))
        self.msg = msg
        self.libFile = libFile
        self.where = where

    def __reduce__(self):
        return self.__class__, (self.msg, self.libFile, self.where)
